//! Primes of direct products: unit idempotents, tame primes and their
//! classification, the direct sum ideal, induced homomorphisms, the maps
//! `A -> omega_A` and `P -> M_P`, and tame max-regular ideals.

use std::sync::Arc;

use serde::Serialize;

use crate::boolean::{SetRing, Subset};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::localization::{localize, MultiplicativeSet};
use crate::ring::{Elem, Ring, RingHom};
use crate::spectrum::{self, PointSet, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TameWitness {
    /// 0-based factor index.
    pub index: usize,
    pub factor_prime: Ideal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Tame(TameWitness),
    Wild,
}

impl Classification {
    pub fn is_tame(&self) -> bool {
        matches!(self, Classification::Tame(_))
    }

    /// `Tame(k=1, (2))`, 1-based.
    pub fn render(&self) -> String {
        match self {
            Classification::Tame(w) => format!("Tame(k={}, {})", w.index + 1, w.factor_prime.render()),
            Classification::Wild => "Wild".to_string(),
        }
    }
}

pub fn factors(ring: &Arc<Ring>) -> Result<&[Arc<Ring>]> {
    ring.factors()
        .ok_or_else(|| Error::NotAProduct(ring.to_string()))
}

fn check_index(ring: &Arc<Ring>, k: usize) -> Result<&Arc<Ring>> {
    let f = factors(ring)?;
    f.get(k).ok_or(Error::UnknownIndex {
        index: k,
        count: f.len(),
    })
}

/// `e_k`: 1 in coordinate `k`, 0 elsewhere.
pub fn unit_idempotent(ring: &Arc<Ring>, k: usize) -> Result<Elem> {
    check_index(ring, k)?;
    let parts: Vec<Elem> = factors(ring)?
        .iter()
        .enumerate()
        .map(|(i, f)| if i == k { f.one() } else { Elem::ZERO })
        .collect();
    Ok(ring.from_components(&parts))
}

/// Element with component `k` equal to `a` and 0 elsewhere (`a e_k`).
pub fn embed_component(ring: &Arc<Ring>, k: usize, a: Elem) -> Result<Elem> {
    check_index(ring, k)?;
    let n = factors(ring)?.len();
    let parts: Vec<Elem> = (0..n).map(|i| if i == k { a } else { Elem::ZERO }).collect();
    Ok(ring.from_components(&parts))
}

/// `pi_k^-1(I)` for an ideal `I` of factor `k`, generated by `I e_k` and
/// `1 - e_k`.
pub fn factor_preimage(ring: &Arc<Ring>, k: usize, ideal: &Ideal) -> Result<Ideal> {
    let factor = check_index(ring, k)?;
    if !Ring::same(ideal.ring(), factor) {
        return Err(Error::RingMismatch);
    }
    let mut gens = Vec::with_capacity(ideal.generators().len() + 1);
    for &g in ideal.generators() {
        gens.push(embed_component(ring, k, g)?);
    }
    gens.sort();
    let co = ring.sub(ring.one(), unit_idempotent(ring, k)?);
    if co != Elem::ZERO {
        gens.push(co);
    }
    let out = Ideal::closure(ring, &gens);
    debug_assert!(ring
        .elements()
        .all(|a| out.contains(a) == ideal.contains(ring.component(a, k))));
    Ok(out)
}

/// `pi_k^-1(p)` for a prime `p` of factor `k`.
pub fn tame_prime(ring: &Arc<Ring>, k: usize, p: &Ideal) -> Result<Ideal> {
    check_index(ring, k)?;
    p.require_prime()?;
    let out = factor_preimage(ring, k, p)?;
    out.require_prime()
        .map_err(|e| Error::Inconsistency(format!("preimage of a prime is not prime: {e}")))?;
    Ok(out)
}

/// `pi_k(I)` as an ideal of factor `k`.
pub fn project_ideal(ring: &Arc<Ring>, k: usize, ideal: &Ideal) -> Result<Ideal> {
    let factor = check_index(ring, k)?;
    let mut members = fixedbitset::FixedBitSet::with_capacity(factor.size() as usize);
    for a in ideal.elements() {
        members.insert(ring.component(a, k).index());
    }
    Ideal::from_members(factor, members)
}

/// Tame with the least `k` such that `e_k` is not in `P`, otherwise wild.
pub fn classify_prime(ring: &Arc<Ring>, p: &Ideal) -> Result<Classification> {
    let n = factors(ring)?.len();
    if !Ring::same(p.ring(), ring) {
        return Err(Error::RingMismatch);
    }
    p.require_prime()?;
    let outside: Vec<usize> = (0..n)
        .filter(|&k| !p.contains(unit_idempotent(ring, k).expect("index in range")))
        .collect();
    let Some(&k) = outside.first() else {
        return Ok(Classification::Wild);
    };
    if outside.len() > 1 {
        return Err(Error::Inconsistency(format!(
            "{} misses more than one unit idempotent",
            p.render()
        )));
    }
    let q = project_ideal(ring, k, p)?;
    if &factor_preimage(ring, k, &q)? != p {
        return Err(Error::Inconsistency(format!(
            "{} is not the preimage of its projection",
            p.render()
        )));
    }
    Ok(Classification::Tame(TameWitness {
        index: k,
        factor_prime: q,
    }))
}

/// The ideal generated by all unit idempotents.
pub fn direct_sum_ideal(ring: &Arc<Ring>) -> Result<Ideal> {
    let n = factors(ring)?.len();
    let gens = (0..n)
        .map(|k| unit_idempotent(ring, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::closure(ring, &gens))
}

/// Points of the spectrum containing the direct sum ideal.
pub fn wild_points(ring: &Arc<Ring>, spec: &Spectrum) -> Result<PointSet> {
    Ok(spec.v(&direct_sum_ideal(ring)?))
}

/// `R/P -> R_k/p` and `R_P -> (R_k)_p`, both induced by `pi_k`.
#[derive(Debug, Clone)]
pub struct TameIsos {
    pub witness: TameWitness,
    pub residue: RingHom,
    pub local: RingHom,
}

pub fn residue_and_local_iso(ring: &Arc<Ring>, p: &Ideal) -> Result<TameIsos> {
    let witness = match classify_prime(ring, p)? {
        Classification::Tame(w) => w,
        Classification::Wild => {
            return Err(Error::Inconsistency(format!("{} is wild", p.render())));
        }
    };
    let k = witness.index;

    let rp = p.quotient_ring();
    let kp = witness.factor_prime.quotient_ring();
    let residue = RingHom::from_fn(&rp, &kp, |c| {
        let a = rp.representative(c).expect("quotient ring");
        kp.class_of(ring.component(a, k)).expect("quotient ring")
    })?;

    let big = localize(&MultiplicativeSet::complement_of_prime(p)?);
    let small = localize(&MultiplicativeSet::complement_of_prime(&witness.factor_prime)?);
    let local = RingHom::from_fn(big.ring(), small.ring(), |x| {
        let (r, t) = big.representative(x);
        small
            .fraction(ring.component(r, k), ring.component(t, k))
            .expect("t outside P has t_k outside p")
    })?;

    for (name, h) in [("R/P", &residue), ("R_P", &local)] {
        if !h.is_bijective() {
            return Err(Error::Inconsistency(format!("{name} map is not bijective")));
        }
    }
    Ok(TameIsos {
        witness,
        residue,
        local,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct InducedHomReport {
    pub primes_checked: usize,
    pub classification_commutes: bool,
    pub unit_idempotents_preserved: bool,
}

impl InducedHomReport {
    pub fn passed(&self) -> bool {
        self.classification_commutes && self.unit_idempotents_preserved
    }
}

/// For `phi = prod phi_k`, checks that the pullback of `Tame(k, q)` is
/// `Tame(k, phi_k^-1(q))`, that wild pulls back to wild, and that
/// `phi(e_k) = e'_k`.
pub fn induced_hom_classification(
    source: &Arc<Ring>,
    target: &Arc<Ring>,
    family: &[RingHom],
) -> Result<InducedHomReport> {
    let phi = RingHom::induced(source, target, family)?;
    let spec = Spectrum::compute(target);
    let mut commutes = true;
    for q in spec.primes() {
        let pulled = phi.preimage(q)?;
        let ok = match (classify_prime(target, q)?, classify_prime(source, &pulled)?) {
            (Classification::Tame(w), Classification::Tame(v)) => {
                v.index == w.index && v.factor_prime == family[w.index].preimage(&w.factor_prime)?
            }
            (Classification::Wild, Classification::Wild) => true,
            _ => false,
        };
        commutes &= ok;
    }
    let n = family.len();
    let mut preserved = true;
    for k in 0..n {
        preserved &= phi.apply(unit_idempotent(source, k)?) == unit_idempotent(target, k)?;
    }
    Ok(InducedHomReport {
        primes_checked: spec.len(),
        classification_commutes: commutes,
        unit_idempotents_preserved: preserved,
    })
}

/// `omega_A`: 1 on `A`, 0 off `A`.
pub fn omega(ring: &Arc<Ring>, a: Subset) -> Result<Elem> {
    let f = factors(ring)?;
    if !a.is_subset(Subset::full(f.len())) {
        return Err(Error::UnknownIndex {
            index: a.indices().last().unwrap_or(0),
            count: f.len(),
        });
    }
    let parts: Vec<Elem> = f
        .iter()
        .enumerate()
        .map(|(k, r)| if a.contains(k) { r.one() } else { Elem::ZERO })
        .collect();
    Ok(ring.from_components(&parts))
}

/// `M_P = {A : omega_A in P}`, a prime of `P(S)`.
pub fn spec_to_powerset(ring: &Arc<Ring>, p: &Ideal) -> Result<Ideal> {
    let n = factors(ring)?.len();
    p.require_prime()?;
    let set_ring = SetRing::new(n)?;
    let mut members = fixedbitset::FixedBitSet::with_capacity(1 << n);
    for a in set_ring.subsets() {
        if p.contains(omega(ring, a)?) {
            members.insert(set_ring.elem(a).index());
        }
    }
    let m = Ideal::from_members(set_ring.ring(), members)
        .map_err(|e| Error::Inconsistency(format!("M_P is not an ideal: {e}")))?;
    m.require_prime()
        .map_err(|e| Error::Inconsistency(format!("M_P is not prime: {e}")))?;
    Ok(m)
}

/// `pi_k^-1(M) = R(1 - e_k) + (a e_k : a in M, a^2 = a)` for a max-regular
/// `M` of factor `k`, checked against the preimage and for max-regularity.
pub fn tame_max_regular(ring: &Arc<Ring>, k: usize, m: &Ideal) -> Result<Ideal> {
    let factor = check_index(ring, k)?;
    if !Ring::same(m.ring(), factor) {
        return Err(Error::RingMismatch);
    }
    if !spectrum::is_max_regular(m) {
        return Err(Error::NotMaxRegular(m.render()));
    }
    let mut gens = vec![ring.sub(ring.one(), unit_idempotent(ring, k)?)];
    for e in factor.idempotents().into_iter().filter(|&e| m.contains(e) && e != Elem::ZERO) {
        gens.push(embed_component(ring, k, e)?);
    }
    gens.retain(|&g| g != Elem::ZERO);
    let out = Ideal::closure(ring, &gens);
    let preimage = Ideal::from_predicate(ring, |a| m.contains(ring.component(a, k)))?;
    if out != preimage {
        return Err(Error::Inconsistency(format!(
            "generator formula gives {} but the preimage is {}",
            out.render_members(),
            preimage.render_members()
        )));
    }
    if !spectrum::is_max_regular(&out) {
        return Err(Error::Inconsistency(format!("{} is not max-regular", out.render())));
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct MaxRegularBijection {
    pub from_factors: usize,
    pub in_product: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl MaxRegularBijection {
    pub fn passed(&self) -> bool {
        self.injective && self.surjective
    }
}

/// `(k, M) -> pi_k^-1(M)` against a direct search of the product.
pub fn max_regular_bijection(ring: &Arc<Ring>) -> Result<MaxRegularBijection> {
    let f = factors(ring)?;
    let mut images: Vec<Ideal> = Vec::new();
    for (k, factor) in f.iter().enumerate() {
        for m in spectrum::max_regular_ideals(factor) {
            images.push(tame_max_regular(ring, k, &m)?);
        }
    }
    let direct = spectrum::max_regular_ideals(ring);
    let mut distinct = images.clone();
    distinct.sort_by(|a, b| a.member_order(b));
    distinct.dedup();
    Ok(MaxRegularBijection {
        from_factors: images.len(),
        in_product: direct.len(),
        injective: distinct.len() == images.len(),
        surjective: direct.iter().all(|d| images.contains(d)) && images.iter().all(|i| direct.contains(i)),
    })
}

/// Whether `V(1 - e_k)` is a connected component; must equal "R_k has no
/// nontrivial idempotents".
pub fn v_one_minus_ek_is_component(ring: &Arc<Ring>, k: usize) -> Result<bool> {
    let factor = check_index(ring, k)?;
    let spec = Spectrum::compute(ring);
    let v = spec.v_elem(ring.sub(ring.one(), unit_idempotent(ring, k)?));
    let is_component = spec
        .connected_components()?
        .iter()
        .any(|c| c.component == v);
    if is_component == factor.has_nontrivial_idempotents() {
        return Err(Error::Inconsistency(format!(
            "V(1 - e_{}) component = {is_component} disagrees with the idempotents of {factor}",
            k + 1
        )));
    }
    Ok(is_component)
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentPurity {
    pub points: Vec<usize>,
    pub classifications: Vec<String>,
    pub all_tame: bool,
    pub pure: bool,
}

/// For every component `C` and idempotent `e`: `C` lies in `D(e)` or in
/// `V(e)`; also classifies every point.
pub fn component_purity(ring: &Arc<Ring>) -> Result<Vec<ComponentPurity>> {
    factors(ring)?;
    let spec = Spectrum::compute(ring);
    let idempotents = ring.idempotents();
    let mut out = Vec::new();
    for comp in spec.connected_components()? {
        let pure = idempotents.iter().all(|&e| {
            let d = spec.d(e);
            comp.component.is_subset(&d) || comp.component.is_disjoint(&d)
        });
        let classes = comp
            .component
            .iter()
            .map(|&i| classify_prime(ring, &spec.points()[i].prime))
            .collect::<Result<Vec<_>>>()?;
        out.push(ComponentPurity {
            points: comp.component.iter().copied().collect(),
            all_tame: classes.iter().all(Classification::is_tame),
            classifications: classes.iter().map(Classification::render).collect(),
            pure,
        });
    }
    Ok(out)
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

    fn z4z9() -> Arc<Ring> {
        Ring::product(vec![z(4), z(9)]).unwrap()
    }

    #[test]
    fn unit_idempotents() {
        let r = z4z9();
        let e1 = unit_idempotent(&r, 0).unwrap();
        let e2 = unit_idempotent(&r, 1).unwrap();
        assert_eq!(r.render(e1), "(1,0)");
        assert_eq!(r.mul(e1, e2), Elem::ZERO);
        assert_eq!(r.add(e1, e2), r.one());
        assert_eq!(r.mul(e1, e1), e1);
        assert!(matches!(
            unit_idempotent(&r, 2),
            Err(Error::UnknownIndex { index: 2, count: 2 })
        ));
        assert!(matches!(unit_idempotent(&z(4), 0), Err(Error::NotAProduct(_))));
    }

    #[test]
    fn tame_prime_construction() {
        let r = z4z9();
        let f = r.factors().unwrap();
        let p = tame_prime(&r, 0, &Ideal::principal(&f[0], Elem(2))).unwrap();
        assert_eq!(p.len(), 18);
        assert_eq!(p.render(), "((2,0), (0,1))");
        for a in r.elements() {
            assert_eq!(p.contains(a), r.component(a, 0).0 % 2 == 0);
        }
        let r3 = Ring::product(vec![z(4), z(5), z(3)]).unwrap();
        let f3 = r3.factors().unwrap();
        let q = tame_prime(&r3, 1, &Ideal::zero(&f3[1])).unwrap();
        assert_eq!(q.len(), 12);
        let z12 = z(12);
        let err = tame_prime(
            &Ring::product(vec![z12.clone(), z(5)]).unwrap(),
            0,
            &Ideal::principal(&z12, Elem(6)),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotPrime { witness: Some(_), .. }));
    }

    #[test]
    fn classification_examples() {
        let r = z4z9();
        let p1 = Ideal::closure(&r, &[tuple(&r, &[2, 0]), tuple(&r, &[0, 1])]);
        let c = classify_prime(&r, &p1).unwrap();
        assert_eq!(c.render(), "Tame(k=1, (2))");
        let p2 = Ideal::closure(&r, &[tuple(&r, &[1, 0]), tuple(&r, &[0, 3])]);
        assert_eq!(classify_prime(&r, &p2).unwrap().render(), "Tame(k=2, (3))");
        for p in Spectrum::compute(&r).primes() {
            assert!(classify_prime(&r, p).unwrap().is_tame());
        }
        let not_prime = Ideal::closure(&r, &[tuple(&r, &[2, 3])]);
        assert!(classify_prime(&r, &not_prime).is_err());
    }

    #[test]
    fn direct_sum_is_everything() {
        let r = z4z9();
        assert!(direct_sum_ideal(&r).unwrap().is_whole());
        let spec = Spectrum::compute(&r);
        assert!(wild_points(&r, &spec).unwrap().is_empty());
    }

    #[test]
    fn residue_and_local_isos() {
        let r = z4z9();
        let p = Ideal::closure(&r, &[tuple(&r, &[2, 0]), tuple(&r, &[0, 1])]);
        let isos = residue_and_local_iso(&r, &p).unwrap();
        assert_eq!(isos.residue.source().size(), 2);
        assert_eq!(isos.local.source().size(), 4);
        assert_eq!(isos.local.target().size(), 4);
        let f = Ring::product(vec![z(5), z(4)]).unwrap();
        let q = tame_prime(&f, 0, &Ideal::zero(&f.factors().unwrap()[0])).unwrap();
        let isos = residue_and_local_iso(&f, &q).unwrap();
        assert!(isos.residue.target().is_field());
        assert_eq!(isos.residue.target().size(), 5);
    }

    #[test]
    fn induced_hom_examples() {
        let a = z4z9();
        let b = Ring::product(vec![z(2), z(3)]).unwrap();
        let fam = vec![
            RingHom::structure_map(&z(4), &z(2)).unwrap(),
            RingHom::structure_map(&z(9), &z(3)).unwrap(),
        ];
        let rep = induced_hom_classification(&a, &b, &fam).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.primes_checked, 2);
        let phi = RingHom::induced(&a, &b, &fam).unwrap();
        let q = Ideal::closure(&b, &[tuple(&b, &[0, 1])]);
        let pulled = phi.preimage(&q).unwrap();
        assert_eq!(pulled, Ideal::closure(&a, &[tuple(&a, &[2, 0]), tuple(&a, &[0, 1])]));
        let ids = vec![RingHom::identity(&z(4)), RingHom::identity(&z(9))];
        assert!(induced_hom_classification(&a, &a, &ids).unwrap().passed());
    }

    #[test]
    fn omega_and_powerset() {
        let r = z4z9();
        assert_eq!(omega(&r, Subset::singleton(0)).unwrap(), unit_idempotent(&r, 0).unwrap());
        let p = Ideal::closure(&r, &[tuple(&r, &[2, 0]), tuple(&r, &[0, 1])]);
        let m = spec_to_powerset(&r, &p).unwrap();
        let sr = SetRing::new(2).unwrap();
        assert_eq!(sr.ideal_subsets(&m), vec![Subset::EMPTY, Subset::singleton(1)]);
        assert_eq!(m, sr.prime(0).unwrap());
    }

    #[test]
    fn tame_max_regular_examples() {
        let r = Ring::product(vec![z(6), z(4)]).unwrap();
        let f = r.factors().unwrap();
        let m = tame_max_regular(&r, 0, &Ideal::principal(&f[0], Elem(3))).unwrap();
        for a in r.elements() {
            assert_eq!(m.contains(a), r.component(a, 0).0 % 3 == 0);
        }
        let m2 = tame_max_regular(&r, 1, &Ideal::zero(&f[1])).unwrap();
        let e2 = unit_idempotent(&r, 1).unwrap();
        assert_eq!(m2, Ideal::principal(&r, r.sub(r.one(), e2)));
        let rep = max_regular_bijection(&r).unwrap();
        assert_eq!((rep.from_factors, rep.in_product), (3, 3));
        assert!(rep.passed());
        assert!(matches!(
            tame_max_regular(&r, 1, &Ideal::principal(&f[1], Elem(2))),
            Err(Error::NotMaxRegular(_))
        ));
    }

    #[test]
    fn v_one_minus_ek() {
        assert!(v_one_minus_ek_is_component(&z4z9(), 0).unwrap());
        let r = Ring::product(vec![z(6), z(4)]).unwrap();
        assert!(!v_one_minus_ek_is_component(&r, 0).unwrap());
        assert!(v_one_minus_ek_is_component(&r, 1).unwrap());
        let f = Ring::product(vec![z(7), z(6)]).unwrap();
        assert!(v_one_minus_ek_is_component(&f, 0).unwrap());
    }

    #[test]
    fn purity() {
        let comps = component_purity(&z4z9()).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.pure && c.all_tame));
        let r = Ring::product(vec![z(6), z(4)]).unwrap();
        let comps = component_purity(&r).unwrap();
        assert_eq!(comps.len(), 3);
        let spec = Spectrum::compute(&r);
        let e = tuple(&r, &[3, 0]);
        let d = spec.d(e);
        for c in &comps {
            let set: PointSet = c.points.iter().copied().collect();
            assert!(set.is_subset(&d) || set.is_disjoint(&d));
        }
        let single = Ring::product(vec![z(8)]).unwrap();
        assert!(component_purity(&single).unwrap()[0].pure);
    }
}
