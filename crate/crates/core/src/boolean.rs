//! The Boolean ring of idempotents, power set rings and the finite Stone
//! isomorphism between them.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Elem, Ring, RingHom};

/// Largest index set whose power set is enumerated.
pub const MAX_INDEX_SET: usize = 16;

/// A subset of an index set `{0, .., n-1}`, bit `k` for index `k`.
///
/// Displayed with 1-based indices, e.g. `{1, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        Subset(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn singleton(k: usize) -> Subset {
        Subset(1 << k)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Subset {
        Subset(indices.into_iter().fold(0, |acc, k| acc | 1 << k))
    }

    pub fn contains(self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn insert(&mut self, k: usize) {
        self.0 |= 1 << k;
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn symmetric_difference(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    /// `S \ self` for `S` of size `n`.
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&k| self.contains(k))
    }

    /// All subsets of an `n`-element set, in bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        (0..1u64 << n).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().map(|k| (k + 1).to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.indices().map(|k| k + 1).collect();
        one_based.serialize(s)
    }
}

/// `B(R)`: the idempotents of `R` with `e (+) f = e + f - 2ef`.
#[derive(Debug, Clone)]
pub struct BooleanRing {
    host: Arc<Ring>,
    carrier: Vec<Elem>,
}

impl BooleanRing {
    pub fn new(host: &Arc<Ring>) -> BooleanRing {
        BooleanRing {
            host: host.clone(),
            carrier: host.idempotents(),
        }
    }

    pub fn host(&self) -> &Arc<Ring> {
        &self.host
    }

    /// Idempotents of the host, ascending.
    pub fn carrier(&self) -> &[Elem] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.carrier.binary_search(&e).is_ok()
    }

    pub fn add(&self, e: Elem, f: Elem) -> Elem {
        let r = &self.host;
        let ef = r.mul(e, f);
        r.sub(r.add(e, f), r.add(ef, ef))
    }

    pub fn mul(&self, e: Elem, f: Elem) -> Elem {
        self.host.mul(e, f)
    }

    /// `e <= f` iff `ef = e`.
    pub fn le(&self, e: Elem, f: Elem) -> bool {
        self.mul(e, f) == e
    }

    /// Minimal nonzero idempotents, ascending.
    pub fn atoms(&self) -> Vec<Elem> {
        self.carrier
            .iter()
            .copied()
            .filter(|&e| e != Elem::ZERO)
            .filter(|&e| {
                self.carrier
                    .iter()
                    .all(|&f| f == Elem::ZERO || f == e || !self.le(f, e))
            })
            .collect()
    }

    /// Atoms `a` with `a <= e`.
    pub fn atoms_below(&self, e: Elem) -> Vec<Elem> {
        self.atoms().into_iter().filter(|&a| self.le(a, e)).collect()
    }

    /// Checks closure and the Boolean ring laws on every pair and triple.
    pub fn verify_laws(&self) -> Result<()> {
        let fail = |law: &str, w: &[Elem]| {
            let parts: Vec<String> = w.iter().map(|&e| self.host.render(e)).collect();
            Err(Error::Inconsistency(format!(
                "B({}) violates {law} at {}",
                self.host,
                parts.join(", ")
            )))
        };
        let zero = Elem::ZERO;
        let one = self.host.one();
        for &e in &self.carrier {
            if self.mul(e, e) != e {
                return fail("idempotence", &[e]);
            }
            if self.add(e, e) != zero {
                return fail("characteristic 2", &[e]);
            }
            if self.add(e, zero) != e || self.mul(e, one) != e {
                return fail("identities", &[e]);
            }
            for &f in &self.carrier {
                if !self.contains(self.add(e, f)) || !self.contains(self.mul(e, f)) {
                    return fail("closure", &[e, f]);
                }
                if self.add(e, f) != self.add(f, e) {
                    return fail("commutativity", &[e, f]);
                }
                for &g in &self.carrier {
                    if self.add(self.add(e, f), g) != self.add(e, self.add(f, g)) {
                        return fail("associativity of (+)", &[e, f, g]);
                    }
                    if self.mul(e, self.add(f, g)) != self.add(self.mul(e, f), self.mul(e, g)) {
                        return fail("distributivity", &[e, f, g]);
                    }
                }
            }
        }
        Ok(())
    }

    /// `(carrier, (+), *)` as a table ring; element `i` is `carrier[i]`.
    pub fn to_ring(&self) -> Result<Arc<Ring>> {
        let n = self.carrier.len();
        let pos = |e: Elem| self.carrier.binary_search(&e).expect("closed") as u32;
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for &e in &self.carrier {
            for &f in &self.carrier {
                add.push(pos(self.add(e, f)));
                mul.push(pos(self.mul(e, f)));
            }
        }
        Ring::table(Some(&format!("B({})", self.host)), n, add, mul)
    }

    /// `e -> {atoms below e}`.
    pub fn stone_iso(&self) -> Result<StoneIso> {
        let atoms = self.atoms();
        if atoms.len() > MAX_INDEX_SET {
            return Err(Error::IndexSetTooLarge {
                size: atoms.len(),
                max: MAX_INDEX_SET,
            });
        }
        let images = self
            .carrier
            .iter()
            .map(|&e| {
                Subset::from_indices(
                    atoms
                        .iter()
                        .enumerate()
                        .filter(|(_, &a)| self.le(a, e))
                        .map(|(i, _)| i),
                )
            })
            .collect();
        Ok(StoneIso {
            boolean: self.clone(),
            set_ring: SetRing::new(atoms.len())?,
            atoms,
            images,
        })
    }
}

/// Atoms of `B(R)`.
pub fn atoms(ring: &Arc<Ring>) -> Vec<Elem> {
    BooleanRing::new(ring).atoms()
}

/// The power set ring `P(S)` of `S = {0, .., n-1}`, realised as the product
/// of `n` copies of `Z/2` (subset = characteristic vector).
#[derive(Debug, Clone)]
pub struct SetRing {
    n: usize,
    ring: Arc<Ring>,
}

impl SetRing {
    pub fn new(n: usize) -> Result<SetRing> {
        if n > MAX_INDEX_SET {
            return Err(Error::IndexSetTooLarge {
                size: n,
                max: MAX_INDEX_SET,
            });
        }
        let ring = if n == 0 {
            Ring::modular(1)?
        } else {
            let z2 = Ring::modular(2)?;
            Ring::product(vec![z2; n])?
        };
        Ok(SetRing { n, ring })
    }

    pub fn index_len(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Element for a subset; index `k` is product coordinate `k`.
    pub fn elem(&self, a: Subset) -> Elem {
        let mut x = 0u64;
        for k in 0..self.n {
            x = x << 1 | a.contains(k) as u64;
        }
        Elem(x)
    }

    pub fn subset(&self, x: Elem) -> Subset {
        Subset::from_indices((0..self.n).filter(|&k| x.0 >> (self.n - 1 - k) & 1 == 1))
    }

    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        Subset::all(self.n)
    }

    /// `M_k = P(S \ {k})`.
    pub fn prime(&self, k: usize) -> Result<Ideal> {
        if k >= self.n {
            return Err(Error::UnknownIndex {
                index: k,
                count: self.n,
            });
        }
        Ideal::from_predicate(&self.ring, |x| !self.subset(x).contains(k))
    }

    /// The `|S|` primes `M_0, .., M_{n-1}`.
    pub fn primes(&self) -> Vec<Ideal> {
        (0..self.n)
            .map(|k| self.prime(k).expect("index in range"))
            .collect()
    }

    /// The `k` with `ideal = M_k`, if any.
    pub fn prime_index(&self, ideal: &Ideal) -> Option<usize> {
        (0..self.n).find(|&k| self.prime(k).is_ok_and(|m| &m == ideal))
    }

    /// Members of an ideal of `P(S)`, as subsets.
    pub fn ideal_subsets(&self, ideal: &Ideal) -> Vec<Subset> {
        let mut out: Vec<Subset> = ideal.elements().map(|x| self.subset(x)).collect();
        out.sort();
        out
    }
}

/// `B(R) -> P(atoms)`.
#[derive(Debug, Clone)]
pub struct StoneIso {
    boolean: BooleanRing,
    set_ring: SetRing,
    atoms: Vec<Elem>,
    images: Vec<Subset>,
}

impl StoneIso {
    pub fn atoms(&self) -> &[Elem] {
        &self.atoms
    }

    pub fn set_ring(&self) -> &SetRing {
        &self.set_ring
    }

    pub fn boolean(&self) -> &BooleanRing {
        &self.boolean
    }

    pub fn apply(&self, e: Elem) -> Option<Subset> {
        let i = self.boolean.carrier.binary_search(&e).ok()?;
        Some(self.images[i])
    }

    /// `(+)`-sum of the atoms in `a`.
    pub fn inverse(&self, a: Subset) -> Elem {
        a.indices()
            .fold(Elem::ZERO, |acc, i| self.boolean.add(acc, self.atoms[i]))
    }

    /// Pairs `(e, image)` in carrier order.
    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Subset)> + '_ {
        self.boolean.carrier.iter().copied().zip(self.images.iter().copied())
    }

    /// The isomorphism as a verified ring homomorphism out of
    /// `BooleanRing::to_ring`.
    pub fn to_ring_hom(&self) -> Result<RingHom> {
        let source = self.boolean.to_ring()?;
        let map = self.images.iter().map(|&a| self.set_ring.elem(a)).collect();
        RingHom::new(source, self.set_ring.ring.clone(), map)
    }

    /// Bijective, additive and multiplicative on every pair; each idempotent
    /// is the sum of the atoms below it.
    pub fn verify(&self) -> Result<()> {
        let b = &self.boolean;
        let n = self.atoms.len();
        if b.len() as u64 != 1u64 << n {
            return Err(Error::Inconsistency(format!(
                "{} idempotents but {n} atoms",
                b.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for (e, a) in self.pairs() {
            if !seen.insert(a) {
                return Err(Error::Inconsistency(format!("two idempotents map to {a}")));
            }
            if self.inverse(a) != e {
                return Err(Error::Inconsistency(format!(
                    "{} is not the sum of the atoms below it",
                    b.host.render(e)
                )));
            }
        }
        for (e, a) in self.pairs() {
            for (f, c) in self.pairs() {
                let sum = self.apply(b.add(e, f));
                let prod = self.apply(b.mul(e, f));
                if sum != Some(a.symmetric_difference(c)) || prod != Some(a.intersection(c)) {
                    return Err(Error::Inconsistency(format!(
                        "Stone map fails at {}, {}",
                        b.host.render(e),
                        b.host.render(f)
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Value;

    fn z(n: u64) -> Arc<Ring> {
        Ring::modular(n).unwrap()
    }

    #[test]
    fn boolean_ring_of_z6() {
        let b = BooleanRing::new(&z(6));
        assert_eq!(b.carrier(), &[Elem(0), Elem(1), Elem(3), Elem(4)]);
        // 3 + 4 - 2*12 = -17 = 1 mod 6
        assert_eq!((3i64 + 4 - 2 * 12).rem_euclid(6), 1);
        assert_eq!(b.add(Elem(3), Elem(4)), Elem(1));
        assert_eq!(b.atoms(), vec![Elem(3), Elem(4)]);
        b.verify_laws().unwrap();
    }

    #[test]
    fn connected_ring_has_one_atom() {
        let b = BooleanRing::new(&z(4));
        assert_eq!(b.len(), 2);
        assert_eq!(b.atoms(), vec![Elem(1)]);
    }

    #[test]
    fn product_carrier_is_product_of_carriers() {
        let r = Ring::product(vec![z(6), z(4)]).unwrap();
        let b = BooleanRing::new(&r);
        assert_eq!(b.len(), 4 * 2);
        for &e in b.carrier() {
            assert_eq!(r.mul(e, e), e);
        }
        let atoms: Vec<String> = b.atoms().iter().map(|&a| r.render(a)).collect();
        assert_eq!(atoms, vec!["(0,1)", "(3,0)", "(4,0)"]);
    }

    #[test]
    fn stone_iso_of_z6() {
        let iso = BooleanRing::new(&z(6)).stone_iso().unwrap();
        iso.verify().unwrap();
        // atom order: 3 is index 0, 4 is index 1
        assert_eq!(iso.apply(Elem(3)), Some(Subset::singleton(0)));
        assert_eq!(iso.apply(Elem(4)), Some(Subset::singleton(1)));
        assert_eq!(iso.apply(Elem(1)), Some(Subset::full(2)));
        assert_eq!(iso.apply(Elem(0)), Some(Subset::EMPTY));
        iso.to_ring_hom().unwrap();
    }

    #[test]
    fn stone_iso_of_field_and_product() {
        let iso = BooleanRing::new(&z(7)).stone_iso().unwrap();
        assert_eq!(iso.set_ring().index_len(), 1);
        let r = Ring::product(vec![z(6), z(4)]).unwrap();
        let iso = BooleanRing::new(&r).stone_iso().unwrap();
        iso.verify().unwrap();
        assert_eq!(iso.set_ring().index_len(), 3);
        assert!(iso.to_ring_hom().unwrap().is_bijective());
    }

    #[test]
    fn set_ring_primes() {
        let p = SetRing::new(3).unwrap();
        let primes = p.primes();
        assert_eq!(primes.len(), 3);
        for (k, m) in primes.iter().enumerate() {
            assert!(m.is_prime() && m.is_maximal());
            let subsets = p.ideal_subsets(m);
            let expect: Vec<Subset> = Subset::all(3).filter(|a| !a.contains(k)).collect();
            assert_eq!(subsets, expect);
        }
        // exhaustive prime filter on all 8-element subsets of P(S) is done in
        // the oracle tests; here the count matches |S|
        let oracle = crate::ideal::all_ideals(p.ring(), &Default::default()).unwrap();
        assert_eq!(oracle.iter().filter(|i| i.is_prime()).count(), 3);

        let one = SetRing::new(1).unwrap();
        let m = one.prime(0).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn subset_encoding_round_trips() {
        let p = SetRing::new(3).unwrap();
        for a in p.subsets() {
            assert_eq!(p.subset(p.elem(a)), a);
        }
        let e = p.elem(Subset::singleton(0));
        let tuple = Value::Tuple(vec![Value::Int(1), Value::Int(0), Value::Int(0)]);
        assert_eq!(p.ring().decode(&tuple).unwrap(), e);
        assert_eq!(Subset::from_indices([0, 2]).to_string(), "{1, 3}");
    }
}
