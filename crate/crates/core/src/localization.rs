//! Rings of fractions of finite rings, the filter-indexed multiplicative sets
//! of a product of local rings, and the lying-over search.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::boolean::Subset;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Elem, Fractions, Ring, RingHom};
use crate::spectrum::Spectrum;
use crate::ultrafilter::Filter;

/// Where a multiplicative set came from.
#[derive(Debug, Clone)]
pub enum Provenance {
    ComplementOfPrime(Ideal),
    /// `{x : Omega(x) in F}` over the maximal ideals of local factors.
    TFilter(Filter),
    /// `{x : support(x) in F}`.
    UFilter(Filter),
    Explicit(Vec<Elem>),
}

#[derive(Clone)]
pub struct MultiplicativeSet {
    ring: Arc<Ring>,
    members: FixedBitSet,
    provenance: Provenance,
}

impl MultiplicativeSet {
    /// `R \ p` for a prime `p`.
    pub fn complement_of_prime(p: &Ideal) -> Result<MultiplicativeSet> {
        p.require_prime()?;
        let ring = p.ring().clone();
        let mut members = FixedBitSet::with_capacity(ring.size() as usize);
        for a in ring.elements().filter(|&a| !p.contains(a)) {
            members.insert(a.index());
        }
        Ok(MultiplicativeSet {
            ring,
            members,
            provenance: Provenance::ComplementOfPrime(p.clone()),
        })
    }

    /// `T_F = {x : Omega(x) in F}`. The filter may be improper, in which case
    /// `T_F` is all of `R`.
    pub fn t_filter(ring: &Arc<Ring>, filter: &Filter) -> Result<MultiplicativeSet> {
        let local = LocalFactors::new(ring)?;
        check_index_set(ring, filter)?;
        let set = MultiplicativeSet::from_predicate(ring, Provenance::TFilter(filter.clone()), |x| {
            filter.contains(local.omega(x))
        });
        set.verify()?;
        Ok(set)
    }

    /// `U_F = {x : support(x) in F}`.
    pub fn u_filter(ring: &Arc<Ring>, filter: &Filter) -> Result<MultiplicativeSet> {
        check_index_set(ring, filter)?;
        let set = MultiplicativeSet::from_predicate(ring, Provenance::UFilter(filter.clone()), |x| {
            filter.contains(support(ring, x))
        });
        set.verify()?;
        Ok(set)
    }

    /// A set given element by element; must contain 1 and be closed under
    /// products.
    pub fn explicit(ring: &Arc<Ring>, elems: &[Elem]) -> Result<MultiplicativeSet> {
        let mut members = FixedBitSet::with_capacity(ring.size() as usize);
        for &e in elems {
            if !ring.contains(e) {
                return Err(Error::NotMultiplicative(format!("{} is not an element", e.0)));
            }
            members.insert(e.index());
        }
        let set = MultiplicativeSet {
            ring: ring.clone(),
            members,
            provenance: Provenance::Explicit(elems.to_vec()),
        };
        set.verify()?;
        Ok(set)
    }

    /// Multiplicative closure of `gens` together with 1.
    pub fn generated_by(ring: &Arc<Ring>, gens: &[Elem]) -> Result<MultiplicativeSet> {
        if let Some(g) = gens.iter().find(|g| !ring.contains(**g)) {
            return Err(Error::NotMultiplicative(format!("{} is not an element", g.0)));
        }
        let mut members = FixedBitSet::with_capacity(ring.size() as usize);
        members.insert(ring.one().index());
        let mut list = vec![ring.one()];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = ring.mul(x, g);
                if !members.put(y.index()) {
                    list.push(y);
                }
            }
            i += 1;
        }
        Ok(MultiplicativeSet {
            ring: ring.clone(),
            members,
            provenance: Provenance::Explicit(gens.to_vec()),
        })
    }

    fn from_predicate(
        ring: &Arc<Ring>,
        provenance: Provenance,
        pred: impl Fn(Elem) -> bool,
    ) -> MultiplicativeSet {
        let mut members = FixedBitSet::with_capacity(ring.size() as usize);
        for a in ring.elements().filter(|&a| pred(a)) {
            members.insert(a.index());
        }
        MultiplicativeSet {
            ring: ring.clone(),
            members,
            provenance,
        }
    }

    pub fn verify(&self) -> Result<()> {
        let r = &self.ring;
        if !self.contains(r.one()) {
            return Err(Error::NotMultiplicative("1 is missing".into()));
        }
        let elems: Vec<Elem> = self.elements().collect();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i..] {
                if !self.contains(r.mul(a, b)) {
                    return Err(Error::NotMultiplicative(format!(
                        "{} * {} falls outside",
                        r.render(a),
                        r.render(b)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a.index())
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones().map(|i| Elem(i as u64))
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn meets(&self, ideal: &Ideal) -> bool {
        !self.members.is_disjoint(ideal.members())
    }
}

impl fmt::Debug for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiplicativeSet({} elements of {}, {:?})", self.len(), self.ring, self.provenance)
    }
}

fn check_index_set(ring: &Arc<Ring>, filter: &Filter) -> Result<()> {
    let n = ring
        .factors()
        .ok_or_else(|| Error::NotAProduct(ring.to_string()))?
        .len();
    if filter.index_len() != n {
        return Err(Error::InvalidFilter(format!(
            "filter lives on {} indices, ring has {n} factors",
            filter.index_len()
        )));
    }
    Ok(())
}

/// `T^-1 R` with its canonical map.
#[derive(Debug, Clone)]
pub struct LocalizedRing {
    set: MultiplicativeSet,
    ring: Arc<Ring>,
    canonical: RingHom,
    kernel: Ideal,
}

/// Builds `T^-1 R`. Classes of pairs are numbered by their least pair
/// `(r, t)`, `r` compared first. `0 in T` gives the zero ring.
pub fn localize(t: &MultiplicativeSet) -> LocalizedRing {
    let base = t.ring.clone();
    let n = base.size() as usize;
    let denominators: Vec<Elem> = t.elements().collect();

    let kernel = Ideal::from_predicate(&base, |a| {
        denominators.iter().any(|&s| base.mul(a, s) == Elem::ZERO)
    })
    .expect("annihilated elements form an ideal");

    // cosets of the kernel, numbered by least element
    let mut coset = vec![u32::MAX; n];
    let mut coset_count = 0u32;
    let kernel_elems: Vec<Elem> = kernel.elements().collect();
    for a in base.elements() {
        if coset[a.index()] != u32::MAX {
            continue;
        }
        for &k in &kernel_elems {
            coset[base.add(a, k).index()] = coset_count;
        }
        coset_count += 1;
    }

    // t is a non-zero-divisor mod the kernel, hence invertible there
    let mut inverse = vec![u64::MAX; n];
    let one_coset = coset[base.one().index()];
    for &s in &denominators {
        let y = base
            .elements()
            .find(|&y| coset[base.mul(s, y).index()] == one_coset)
            .expect("denominators are invertible modulo the kernel");
        inverse[s.index()] = y.0;
    }

    // number classes by least pair
    let mut class_of_coset = vec![u32::MAX; coset_count as usize];
    let mut reps = Vec::with_capacity(coset_count as usize);
    'outer: for r in base.elements() {
        for &s in &denominators {
            let c = coset[base.mul(r, Elem(inverse[s.index()])).index()] as usize;
            if class_of_coset[c] == u32::MAX {
                class_of_coset[c] = reps.len() as u32;
                reps.push((r, s));
                if reps.len() == coset_count as usize {
                    break 'outer;
                }
            }
        }
    }
    let residue = coset.iter().map(|&c| class_of_coset[c as usize]).collect();

    let ring = Ring::fraction(Fractions {
        base: base.clone(),
        denominators: t.members.clone(),
        residue,
        inverse,
        reps,
    });
    let fr = ring.fractions().expect("fraction ring");
    let map = base
        .elements()
        .map(|a| fr.class_of_pair(a, base.one()))
        .collect();
    let canonical = RingHom::new_unchecked(base, ring.clone(), map);
    LocalizedRing {
        set: t.clone(),
        ring,
        canonical,
        kernel,
    }
}

impl LocalizedRing {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<Ring> {
        &self.set.ring
    }

    pub fn set(&self) -> &MultiplicativeSet {
        &self.set
    }

    /// `a -> a/1`.
    pub fn canonical(&self) -> &RingHom {
        &self.canonical
    }

    /// `{a : at = 0 for some t in T}`.
    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    /// The class of `r/t`.
    pub fn fraction(&self, r: Elem, t: Elem) -> Result<Elem> {
        if !self.set.contains(t) {
            return Err(Error::NotMultiplicative(format!(
                "{} is not a denominator",
                self.base().render(t)
            )));
        }
        Ok(self.ring.fractions().expect("fraction ring").class_of_pair(r, t))
    }

    /// Least pair representing a class.
    pub fn representative(&self, x: Elem) -> (Elem, Elem) {
        self.ring.fractions().expect("fraction ring").reps[x.index()]
    }

    /// Checks the defining pair relation on every pair of pairs (only for
    /// small rings; `O(|R|^2 |T|^3)`), and that the canonical map is a ring
    /// homomorphism sending denominators to units.
    pub fn verify(&self) -> Result<()> {
        self.canonical.verify()?;
        let base = self.base();
        for t in self.set.elements() {
            if !self.ring.is_unit(self.canonical.apply(t)) {
                return Err(Error::Inconsistency(format!(
                    "{}/1 is not a unit",
                    base.render(t)
                )));
            }
        }
        let dens: Vec<Elem> = self.set.elements().collect();
        for r in base.elements() {
            for &t in &dens {
                for r2 in base.elements() {
                    for &t2 in &dens {
                        let diff = base.sub(base.mul(r, t2), base.mul(r2, t));
                        let related = dens.iter().any(|&u| base.mul(u, diff) == Elem::ZERO);
                        let same = self.fraction(r, t)? == self.fraction(r2, t2)?;
                        if related != same {
                            return Err(Error::Inconsistency(format!(
                                "pairs ({}, {}) and ({}, {}) are misclassified",
                                base.render(r),
                                base.render(t),
                                base.render(r2),
                                base.render(t2)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Maximal ideals (as non-unit masks) of the factors of a product of local
/// rings.
#[derive(Debug, Clone)]
pub struct LocalFactors {
    ring: Arc<Ring>,
    nonunits: Vec<FixedBitSet>,
}

impl LocalFactors {
    pub fn new(ring: &Arc<Ring>) -> Result<LocalFactors> {
        let factors = ring
            .factors()
            .ok_or_else(|| Error::NotAProduct(ring.to_string()))?;
        let mut nonunits = Vec::with_capacity(factors.len());
        for (index, f) in factors.iter().enumerate() {
            if !f.is_local() {
                return Err(Error::NotLocal {
                    index,
                    ring: f.to_string(),
                });
            }
            let mut m = f.unit_mask();
            m.toggle_range(..);
            nonunits.push(m);
        }
        Ok(LocalFactors {
            ring: ring.clone(),
            nonunits,
        })
    }

    /// `Omega(x) = {k : x_k not in m_k}`.
    pub fn omega(&self, x: Elem) -> Subset {
        Subset::from_indices(
            (0..self.nonunits.len())
                .filter(|&k| !self.nonunits[k].contains(self.ring.component(x, k).index())),
        )
    }

    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        let factors = self.ring.factors().expect("product");
        factors
            .iter()
            .zip(&self.nonunits)
            .map(|(f, m)| Ideal::from_members(f, m.clone()).expect("maximal ideal of a local ring"))
            .collect()
    }
}

/// `S(x) = {k : x_k != 0}`.
pub fn support(ring: &Ring, x: Elem) -> Subset {
    let n = ring.factors().map_or(0, <[_]>::len);
    Subset::from_indices((0..n).filter(|&k| ring.component(x, k) != Elem::ZERO))
}

/// `I_F = {a : S \ support(a) in F}`.
pub fn filter_ideal(ring: &Arc<Ring>, filter: &Filter) -> Result<Ideal> {
    check_index_set(ring, filter)?;
    let n = filter.index_len();
    Ideal::from_predicate(ring, |a| filter.contains(support(ring, a).complement(n)))
}

/// Outcome of [`filter_quotient_iso`].
#[derive(Debug, Clone)]
pub struct FilterQuotientIso {
    pub filter: Filter,
    pub t: MultiplicativeSet,
    pub localized: LocalizedRing,
    /// `I_F`, equal to the kernel of `R -> T_F^-1 R`.
    pub ideal: Ideal,
    pub quotient: Arc<Ring>,
    /// `a + I_F -> a/1`, verified bijective.
    pub hom: RingHom,
    /// Classes whose preimage was rebuilt from the partial inverse of the
    /// denominator.
    pub witnessed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FilterQuotientSummary {
    pub filter: String,
    pub denominators: usize,
    pub kernel_size: u64,
    pub quotient_size: u64,
    pub localization_size: u64,
    pub bijective: bool,
}

impl FilterQuotientIso {
    pub fn summary(&self) -> FilterQuotientSummary {
        FilterQuotientSummary {
            filter: self.filter.to_string(),
            denominators: self.t.len(),
            kernel_size: self.ideal.len(),
            quotient_size: self.quotient.size(),
            localization_size: self.localized.ring().size(),
            bijective: self.hom.is_bijective(),
        }
    }
}

/// `R/I_F -> T_F^-1 R` for a product of local rings and a proper filter `F`.
pub fn filter_quotient_iso(ring: &Arc<Ring>, filter: &Filter) -> Result<FilterQuotientIso> {
    let local = LocalFactors::new(ring)?;
    if !filter.is_proper() {
        return Err(Error::ImproperFilter);
    }
    let t = MultiplicativeSet::t_filter(ring, filter)?;
    let localized = localize(&t);
    let ideal = filter_ideal(ring, filter)?;
    if &ideal != localized.kernel() {
        return Err(Error::Inconsistency(format!(
            "kernel of R -> T^-1 R is {} but I_F is {}",
            localized.kernel().render_members(),
            ideal.render_members()
        )));
    }
    let quotient = ideal.quotient_ring();
    let canonical = localized.canonical();
    let hom = RingHom::from_fn(&quotient, localized.ring(), |c| {
        canonical.apply(quotient.representative(c).expect("quotient ring"))
    })?;
    if !hom.is_bijective() {
        return Err(Error::Inconsistency(format!(
            "R/I_F -> T_F^-1 R is not bijective for {filter}"
        )));
    }

    // b/t = (b t')/1 where t'_k = t_k^-1 on Omega(t) and 0 elsewhere
    let factors = ring.factors().expect("product");
    let mut witnessed = 0;
    for x in localized.ring().elements() {
        let (b, s) = localized.representative(x);
        let omega = local.omega(s);
        let parts: Vec<Elem> = (0..factors.len())
            .map(|k| {
                if omega.contains(k) {
                    factors[k]
                        .inverse(ring.component(s, k))
                        .expect("component outside the maximal ideal is a unit")
                } else {
                    Elem::ZERO
                }
            })
            .collect();
        let s_inv = ring.from_components(&parts);
        let a = ring.mul(b, s_inv);
        if canonical.apply(a) != x {
            return Err(Error::Inconsistency(format!(
                "partial inverse fails for {}/{}",
                ring.render(b),
                ring.render(s)
            )));
        }
        witnessed += 1;
    }

    Ok(FilterQuotientIso {
        filter: filter.clone(),
        t,
        localized,
        ideal,
        quotient,
        hom,
        witnessed,
    })
}

/// The improper ("cofinite") filter on a finite index set: `T` contains 0,
/// so `T^-1 R` and `R/I` are both the zero ring.
pub fn degenerate_cofinite_case(ring: &Arc<Ring>) -> Result<(LocalizedRing, Arc<Ring>)> {
    let n = ring
        .factors()
        .ok_or_else(|| Error::NotAProduct(ring.to_string()))?
        .len();
    let filter = Filter::cofinite(n)?;
    let t = MultiplicativeSet::t_filter(ring, &filter)?;
    let localized = localize(&t);
    let quotient = filter_ideal(ring, &filter)?.quotient_ring();
    if !localized.ring().is_zero_ring() || !quotient.is_zero_ring() {
        return Err(Error::Inconsistency(
            "cofinite filter on a finite set should collapse both sides".into(),
        ));
    }
    Ok((localized, quotient))
}

#[derive(Debug, Clone, Serialize)]
pub struct DomainEmbedding {
    pub kernel_matches: bool,
    pub injective: bool,
    pub surjective: bool,
}

/// `R/I_F -> U_F^-1 R` for a product of finite domains.
pub fn domain_embedding_check(ring: &Arc<Ring>, filter: &Filter) -> Result<DomainEmbedding> {
    let factors = ring
        .factors()
        .ok_or_else(|| Error::NotAProduct(ring.to_string()))?;
    for (index, f) in factors.iter().enumerate() {
        if !f.is_domain() {
            return Err(Error::NotDomain {
                index,
                ring: f.to_string(),
            });
        }
    }
    if !filter.is_proper() {
        return Err(Error::ImproperFilter);
    }
    let u = MultiplicativeSet::u_filter(ring, filter)?;
    let localized = localize(&u);
    let ideal = filter_ideal(ring, filter)?;
    let quotient = ideal.quotient_ring();
    let canonical = localized.canonical();
    let hom = RingHom::from_fn(&quotient, localized.ring(), |c| {
        canonical.apply(quotient.representative(c).expect("quotient ring"))
    })?;
    Ok(DomainEmbedding {
        kernel_matches: &ideal == localized.kernel(),
        injective: hom.is_injective(),
        surjective: hom.is_surjective(),
    })
}

/// Whether `P` misses `T_F`. For the principal filter of `A` this must
/// agree with "`P` is tame with index in `A`"; disagreement is an error.
pub fn prime_disjoint_from_t(ring: &Arc<Ring>, filter: &Filter, prime: &Ideal) -> Result<bool> {
    prime.require_prime()?;
    if !Ring::same(prime.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    let t = MultiplicativeSet::t_filter(ring, filter)?;
    let disjoint = !t.meets(prime);
    if let Some(a) = filter.generator() {
        let expected = match crate::product::classify_prime(ring, prime)? {
            crate::product::Classification::Tame(w) => a.contains(w.index),
            crate::product::Classification::Wild => true,
        };
        if expected != disjoint {
            return Err(Error::Inconsistency(format!(
                "{} meets T_F = {disjoint} against the tame index",
                prime.render()
            )));
        }
    }
    Ok(disjoint)
}

/// First prime of the target (in spectrum order) whose preimage is `p`.
pub fn lying_over_minimal(phi: &RingHom, p: &Ideal) -> Result<Ideal> {
    if !Ring::same(p.ring(), phi.source()) {
        return Err(Error::RingMismatch);
    }
    p.require_prime()?;
    if !phi.is_injective() {
        return Err(Error::NotInjective);
    }
    let source_spec = Spectrum::compute(phi.source());
    if source_spec
        .primes()
        .any(|q| q.len() < p.len() && q.is_subset(p))
    {
        return Err(Error::NotMinimal(p.render()));
    }
    for q in Spectrum::compute(phi.target()).primes() {
        if &phi.preimage(q)? == p {
            return Ok(q.clone());
        }
    }
    Err(Error::LyingOverFailed(p.render()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Value;

    fn z(n: u64) -> Arc<Ring> {
        Ring::modular(n).unwrap()
    }

    fn tuple(r: &Ring, xs: &[u64]) -> Elem {
        r.decode(&Value::Tuple(xs.iter().map(|&x| Value::Int(x)).collect()))
            .unwrap()
    }

    #[test]
    fn z12_at_complement_of_2() {
        let r = z(12);
        let p = Ideal::principal(&r, Elem(2));
        let loc = localize(&MultiplicativeSet::complement_of_prime(&p).unwrap());
        assert_eq!(loc.ring().size(), 4);
        loc.verify().unwrap();
        // 3 is inverted; kernel = {a : a*t = 0 for some odd t} = (4)
        assert!(loc.ring().is_unit(loc.canonical().apply(Elem(3))));
        assert_eq!(loc.kernel(), &Ideal::principal(&r, Elem(4)));
        assert!(loc.ring().is_local());
    }

    #[test]
    fn z6_at_complement_of_3() {
        let r = z(6);
        let p = Ideal::principal(&r, Elem(3));
        let loc = localize(&MultiplicativeSet::complement_of_prime(&p).unwrap());
        assert_eq!(loc.ring().size(), 3);
        assert!(loc.ring().is_field());
        loc.verify().unwrap();
    }

    #[test]
    fn trivial_set_gives_a_copy() {
        let r = Ring::product(vec![z(2), z(3)]).unwrap();
        let t = MultiplicativeSet::generated_by(&r, &[]).unwrap();
        assert_eq!(t.len(), 1);
        let loc = localize(&t);
        assert!(loc.canonical().is_bijective());
        loc.verify().unwrap();
    }

    #[test]
    fn zero_denominator_gives_zero_ring() {
        let r = z(6);
        let t = MultiplicativeSet::generated_by(&r, &[Elem(0)]).unwrap();
        assert!(localize(&t).ring().is_zero_ring());
    }

    #[test]
    fn explicit_sets_are_checked() {
        let r = z(6);
        assert!(MultiplicativeSet::explicit(&r, &[Elem(1), Elem(5)]).is_ok());
        assert!(matches!(
            MultiplicativeSet::explicit(&r, &[Elem(1), Elem(2)]),
            Err(Error::NotMultiplicative(_))
        ));
        assert!(MultiplicativeSet::explicit(&r, &[Elem(5)]).is_err());
    }

    #[test]
    fn omega_and_support() {
        let r = Ring::product(vec![z(4), z(9)]).unwrap();
        let lf = LocalFactors::new(&r).unwrap();
        let x = tuple(&r, &[2, 1]);
        assert_eq!(lf.omega(x), Subset::singleton(1));
        assert_eq!(support(&r, x), Subset::full(2));
        assert_eq!(lf.omega(r.one()), Subset::full(2));
        let e1 = tuple(&r, &[1, 0]);
        assert_eq!(lf.omega(e1), Subset::singleton(0));
        assert_eq!(support(&r, e1), Subset::singleton(0));
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(lf.omega(r.mul(a, b)), lf.omega(a).intersection(lf.omega(b)));
            }
        }
        let bad = Ring::product(vec![z(6), z(4)]).unwrap();
        assert!(matches!(
            LocalFactors::new(&bad),
            Err(Error::NotLocal { index: 0, .. })
        ));
    }

    #[test]
    fn filter_quotient_iso_principal_first() {
        let r = Ring::product(vec![z(4), z(9)]).unwrap();
        let f = Filter::principal(2, Subset::singleton(0)).unwrap();
        let iso = filter_quotient_iso(&r, &f).unwrap();
        assert_eq!(iso.quotient.size(), 4);
        assert_eq!(iso.localized.ring().size(), 4);
        // T inverts exactly the elements whose first coordinate is a unit
        for x in r.elements() {
            let first = r.component(x, 0).0;
            assert_eq!(iso.t.contains(x), first % 2 == 1);
        }
        assert_eq!(iso.witnessed, 4);
        iso.hom.verify().unwrap();
    }

    #[test]
    fn filter_quotient_iso_whole_set() {
        let r = Ring::product(vec![z(4), z(9)]).unwrap();
        let f = Filter::principal(2, Subset::full(2)).unwrap();
        let iso = filter_quotient_iso(&r, &f).unwrap();
        assert!(iso.ideal.is_zero());
        assert_eq!(iso.t.len() as u64, r.units().len() as u64);
        assert_eq!(iso.localized.ring().size(), 36);
    }

    #[test]
    fn filter_quotient_iso_three_factors() {
        let r = Ring::product(vec![z(4), z(9), z(25)]).unwrap();
        let f = Filter::principal(3, Subset::from_indices([0, 2])).unwrap();
        let iso = filter_quotient_iso(&r, &f).unwrap();
        assert_eq!(iso.quotient.size(), 100);
        assert_eq!(iso.localized.ring().size(), 100);
    }

    #[test]
    fn improper_filters() {
        let r = Ring::product(vec![z(4), z(9)]).unwrap();
        let f = Filter::cofinite(2).unwrap();
        assert!(matches!(filter_quotient_iso(&r, &f), Err(Error::ImproperFilter)));
        let (loc, q) = degenerate_cofinite_case(&r).unwrap();
        assert!(loc.ring().is_zero_ring() && q.is_zero_ring());
    }

    #[test]
    fn domain_embedding() {
        let r = Ring::product(vec![z(2), z(3)]).unwrap();
        let f = Filter::principal(2, Subset::singleton(1)).unwrap();
        let rep = domain_embedding_check(&r, &f).unwrap();
        assert!(rep.kernel_matches && rep.injective && rep.surjective);
        let k = filter_ideal(&r, &f).unwrap();
        let expect: Vec<Elem> = vec![tuple(&r, &[0, 0]), tuple(&r, &[1, 0])];
        assert_eq!(k.elements().collect::<Vec<_>>(), expect);
        let whole = Filter::principal(2, Subset::full(2)).unwrap();
        assert!(filter_ideal(&r, &whole).unwrap().is_zero());
        let bad = Ring::product(vec![z(4), z(3)]).unwrap();
        assert!(matches!(
            domain_embedding_check(&bad, &f),
            Err(Error::NotDomain { index: 0, .. })
        ));
    }

    #[test]
    fn disjointness_from_t() {
        let r = Ring::product(vec![z(4), z(9)]).unwrap();
        let f = Filter::principal(2, Subset::singleton(0)).unwrap();
        let p1 = Ideal::closure(&r, &[tuple(&r, &[2, 0]), tuple(&r, &[0, 1])]);
        let p2 = Ideal::closure(&r, &[tuple(&r, &[1, 0]), tuple(&r, &[0, 3])]);
        assert!(prime_disjoint_from_t(&r, &f, &p1).unwrap());
        assert!(!prime_disjoint_from_t(&r, &f, &p2).unwrap());
        let all = Filter::principal(2, Subset::full(2)).unwrap();
        for p in Spectrum::compute(&r).primes() {
            assert!(prime_disjoint_from_t(&r, &all, p).unwrap());
        }
    }

    #[test]
    fn lying_over_diagonal() {
        let a = z(3);
        let b = Ring::product(vec![z(3), z(3)]).unwrap();
        let phi = RingHom::from_fn(&a, &b, |x| b.from_components(&[x, x])).unwrap();
        let q = lying_over_minimal(&phi, &Ideal::zero(&a)).unwrap();
        let expect = Ideal::closure(&b, &[tuple(&b, &[0, 1])]);
        assert_eq!(q, expect);
        let id = RingHom::identity(&z(12));
        let p = Ideal::principal(&z(12), Elem(3));
        assert_eq!(lying_over_minimal(&id, &p).unwrap(), p);
        let proj = RingHom::projection(&b, 0).unwrap();
        assert!(matches!(
            lying_over_minimal(&proj, &Ideal::closure(&b, &[tuple(&b, &[0, 1])])),
            Err(Error::NotInjective)
        ));
    }
}
