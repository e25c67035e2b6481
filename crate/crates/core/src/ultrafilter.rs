//! Filters on finite index sets, the support map `a*` and the primes `M*`
//! it induces on a product ring.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use crate::boolean::{SetRing, Subset, MAX_INDEX_SET};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::product::{self, Classification};
use crate::ring::{Elem, Ring};
use crate::spectrum::Spectrum;

/// A filter on `{0, .., n-1}`, stored as the set of its members.
#[derive(Clone, PartialEq, Eq)]
pub struct Filter {
    n: usize,
    members: FixedBitSet,
}

impl Filter {
    /// Checks nonemptiness, upward closure, closure under intersection and
    /// properness.
    pub fn new(n: usize, members: impl IntoIterator<Item = Subset>) -> Result<Filter> {
        check_n(n)?;
        let mut set = FixedBitSet::with_capacity(1 << n);
        for a in members {
            if !a.is_subset(Subset::full(n)) {
                return Err(Error::InvalidFilter(format!("{a} is not a subset of the index set")));
            }
            set.insert(a.0 as usize);
        }
        let f = Filter { n, members: set };
        if f.members.count_ones(..) == 0 {
            return Err(Error::InvalidFilter("no members".into()));
        }
        if f.contains(Subset::EMPTY) {
            return Err(Error::ImproperFilter);
        }
        let list: Vec<Subset> = f.members().collect();
        for &a in &list {
            for b in Subset::all(n) {
                if a.is_subset(b) && !f.contains(b) {
                    return Err(Error::InvalidFilter(format!("{a} is a member but {b} is not")));
                }
            }
            for &b in &list {
                if !f.contains(a.intersection(b)) {
                    return Err(Error::InvalidFilter(format!(
                        "{a} and {b} are members but their intersection is not"
                    )));
                }
            }
        }
        Ok(f)
    }

    /// `{B : A subset of B}`; proper iff `A` is nonempty.
    pub fn principal(n: usize, a: Subset) -> Result<Filter> {
        check_n(n)?;
        if !a.is_subset(Subset::full(n)) {
            return Err(Error::InvalidFilter(format!("{a} is not a subset of the index set")));
        }
        if a.is_empty() {
            return Err(Error::ImproperFilter);
        }
        Ok(Filter::up_set(n, a))
    }

    /// The cofinite filter. On a finite set every subset is cofinite, so this
    /// is the improper filter, the only improper one this type admits.
    pub fn cofinite(n: usize) -> Result<Filter> {
        check_n(n)?;
        Ok(Filter::up_set(n, Subset::EMPTY))
    }

    fn up_set(n: usize, a: Subset) -> Filter {
        let mut members = FixedBitSet::with_capacity(1 << n);
        for b in Subset::all(n).filter(|b| a.is_subset(*b)) {
            members.insert(b.0 as usize);
        }
        Filter { n, members }
    }

    pub fn index_len(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.members.contains(a.0 as usize)
    }

    /// Members in bitmask order.
    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.ones().map(|i| Subset(i as u64))
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(Subset::EMPTY)
    }

    /// Exactly one of `A`, `S \ A` belongs for every `A`.
    pub fn is_ultrafilter(&self) -> bool {
        Subset::all(self.n).all(|a| self.contains(a) != self.contains(a.complement(self.n)))
    }

    /// The least member; a filter on a finite set is the principal filter of
    /// it.
    pub fn generator(&self) -> Option<Subset> {
        self.members().reduce(Subset::intersection)
    }

    /// `P(S)` minus the filter, as an ideal of the set ring (prime exactly
    /// for ultrafilters).
    pub fn complement_ideal(&self, set_ring: &SetRing) -> Result<Ideal> {
        if set_ring.index_len() != self.n {
            return Err(Error::RingMismatch);
        }
        Ideal::from_predicate(set_ring.ring(), |x| !self.contains(set_ring.subset(x)))
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generator() {
            Some(a) => write!(f, "filter{a}"),
            None => write!(f, "filter{{}}"),
        }
    }
}

impl fmt::Debug for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filter(n = {}, {} members, {self})", self.n, self.len())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_INDEX_SET {
        return Err(Error::IndexSetTooLarge {
            size: n,
            max: MAX_INDEX_SET,
        });
    }
    Ok(())
}

/// `{A : k in A}`.
pub fn principal_ultrafilter(n: usize, k: usize) -> Result<Filter> {
    if k >= n {
        return Err(Error::UnknownIndex { index: k, count: n });
    }
    Filter::principal(n, Subset::singleton(k))
}

/// The `n` principal ultrafilters, by index.
pub fn all_ultrafilters(n: usize) -> Result<Vec<Filter>> {
    (0..n).map(|k| principal_ultrafilter(n, k)).collect()
}

/// A prime `p_k` of every factor `R_k`.
#[derive(Debug, Clone)]
pub struct BasePrimeChoice {
    primes: Vec<Ideal>,
}

impl BasePrimeChoice {
    pub fn new(ring: &Arc<Ring>, primes: Vec<Ideal>) -> Result<BasePrimeChoice> {
        let factors = ring
            .factors()
            .ok_or_else(|| Error::NotAProduct(ring.to_string()))?;
        if primes.len() != factors.len() {
            return Err(Error::UnknownIndex {
                index: primes.len(),
                count: factors.len(),
            });
        }
        for (p, f) in primes.iter().zip(factors) {
            if !Ring::same(p.ring(), f) {
                return Err(Error::RingMismatch);
            }
            p.require_prime()?;
        }
        Ok(BasePrimeChoice { primes })
    }

    /// The first prime (in spectrum order) of every factor.
    pub fn first(ring: &Arc<Ring>) -> Result<BasePrimeChoice> {
        let factors = ring
            .factors()
            .ok_or_else(|| Error::NotAProduct(ring.to_string()))?;
        let primes = factors
            .iter()
            .map(|f| Spectrum::compute(f).points()[0].prime.clone())
            .collect();
        BasePrimeChoice::new(ring, primes)
    }

    /// Every choice, in lexicographic order of per-factor spectrum positions.
    pub fn all(ring: &Arc<Ring>) -> Result<Vec<BasePrimeChoice>> {
        let factors = ring
            .factors()
            .ok_or_else(|| Error::NotAProduct(ring.to_string()))?;
        let spectra: Vec<Vec<Ideal>> = factors
            .iter()
            .map(|f| Spectrum::compute(f).primes().cloned().collect())
            .collect();
        Ok(spectra
            .into_iter()
            .multi_cartesian_product()
            .map(|primes| BasePrimeChoice { primes })
            .collect())
    }

    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn render(&self) -> String {
        self.primes.iter().map(Ideal::render).join("; ")
    }
}

/// `a* = {i : a_i in p_i}`.
pub fn a_star(ring: &Ring, a: Elem, base: &BasePrimeChoice) -> Subset {
    Subset::from_indices(
        base.primes
            .iter()
            .enumerate()
            .filter(|(k, p)| p.contains(ring.component(a, *k)))
            .map(|(k, _)| k),
    )
}

/// `M* = {a : a* not in M}` for a prime `M` of `P(S)`.
pub fn m_star(ring: &Arc<Ring>, m: &Ideal, base: &BasePrimeChoice) -> Result<Ideal> {
    let n = base.primes.len();
    let set_ring = SetRing::new(n)?;
    if !Ring::same(m.ring(), set_ring.ring()) {
        return Err(Error::RingMismatch);
    }
    m.require_prime()?;
    let star = Ideal::from_predicate(ring, |a| {
        !m.contains(set_ring.elem(a_star(ring, a, base)))
    })
    .map_err(|e| Error::Inconsistency(format!("M* is not an ideal: {e}")))?;
    star.require_prime()
        .map_err(|e| Error::Inconsistency(format!("M* is not prime: {e}")))?;
    if let Some(k) = set_ring.prime_index(m) {
        let tame = product::tame_prime(ring, k, &base.primes[k])?;
        if tame != star {
            return Err(Error::Inconsistency(format!(
                "M* for the prime avoiding index {} is not the tame prime over p_{}",
                k + 1,
                k + 1
            )));
        }
    }
    Ok(star)
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    pub index_len: usize,
    pub base: String,
    pub injective: bool,
    pub all_prime: bool,
    pub continuity_checked: u64,
    pub continuity_holds: bool,
    pub principal_to_tame: bool,
    /// Non-principal ultrafilters do not exist on a finite set.
    pub wild_direction: &'static str,
    pub left_inverse: bool,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.all_prime
            && self.continuity_holds
            && self.principal_to_tame
            && self.left_inverse
    }
}

/// Checks `M -> M*` on every prime of `P(S)`: injectivity, primality, the
/// continuity identity `{M : a not in M*} = V(a*)` for every `a` (or the
/// first `sample_cap` elements), tame images and `M_{M*} = M`.
pub fn embedding_checks(
    ring: &Arc<Ring>,
    base: &BasePrimeChoice,
    sample_cap: Option<u64>,
) -> Result<EmbeddingReport> {
    let n = base.primes.len();
    let set_ring = SetRing::new(n)?;
    let primes = set_ring.primes();
    let stars: Vec<Ideal> = primes
        .iter()
        .map(|m| m_star(ring, m, base))
        .collect::<Result<_>>()?;

    let injective = stars.iter().tuple_combinations().all(|(a, b)| a != b);
    let all_prime = stars.iter().all(Ideal::is_prime);

    let limit = sample_cap.unwrap_or(u64::MAX).min(ring.size());
    let mut continuity_holds = true;
    let one = set_ring.ring().one();
    for a in (0..limit).map(Elem) {
        let star = set_ring.elem(a_star(ring, a, base));
        let complement = set_ring.ring().sub(one, star);
        for (m, s) in primes.iter().zip(&stars) {
            let in_preimage = !s.contains(a);
            let in_v = m.contains(star);
            let in_d_complement = !m.contains(complement);
            if in_preimage != in_v || in_v != in_d_complement {
                continuity_holds = false;
            }
        }
    }

    let mut principal_to_tame = true;
    let mut left_inverse = true;
    for (k, (m, s)) in primes.iter().zip(&stars).enumerate() {
        match product::classify_prime(ring, s)? {
            Classification::Tame(w) => {
                if w.index != k || w.factor_prime != base.primes[k] {
                    principal_to_tame = false;
                }
            }
            Classification::Wild => principal_to_tame = false,
        }
        if &product::spec_to_powerset(ring, s)? != m {
            left_inverse = false;
        }
    }

    Ok(EmbeddingReport {
        index_len: n,
        base: base.render(),
        injective,
        all_prime,
        continuity_checked: limit,
        continuity_holds,
        principal_to_tame,
        wild_direction: "vacuous: every ultrafilter on a finite set is principal",
        left_inverse,
    })
}
