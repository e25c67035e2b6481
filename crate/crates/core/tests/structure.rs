use std::sync::Arc;

use proptest::prelude::*;

use prodspec::boolean::{BooleanRing, SetRing, Subset};
use prodspec::localization::{localize, support, MultiplicativeSet};
use prodspec::product::{
    classify_prime, spec_to_powerset, tame_prime, unit_idempotent, Classification,
};
use prodspec::spectrum::max_regular_ideals;
use prodspec::ultrafilter::{a_star, all_ultrafilters, m_star, principal_ultrafilter};
use prodspec::{BasePrimeChoice, Elem, Filter, Fixture, Ideal, Limits, Ring, RingExpr, Spectrum};

fn factor() -> impl Strategy<Value = RingExpr> {
    prop_oneof![
        4 => (2u64..=12).prop_map(RingExpr::ZMod),
        1 => prop::sample::select(vec![Fixture::F4, Fixture::F2e, Fixture::F2xy, Fixture::F9])
            .prop_map(RingExpr::Fixture),
    ]
}

fn product() -> impl Strategy<Value = RingExpr> {
    prop::collection::vec(factor(), 2..=3).prop_map(RingExpr::Prod)
}

fn any_ring() -> impl Strategy<Value = RingExpr> {
    prop_oneof![factor(), product()]
}

fn small_ring() -> impl Strategy<Value = RingExpr> {
    let f = || (2u64..=8).prop_map(RingExpr::ZMod);
    prop_oneof![f(), (f(), f()).prop_map(|(a, b)| RingExpr::Prod(vec![a, b]))]
}

fn build(e: &RingExpr) -> Arc<Ring> {
    e.elaborate(&Limits::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn boolean_ring_laws_and_atom_decomposition(e in any_ring()) {
        let r = build(&e);
        let b = BooleanRing::new(&r);
        b.verify_laws().unwrap();
        for &x in b.carrier() {
            let sum = b.atoms_below(x).into_iter().fold(Elem::ZERO, |acc, a| b.add(acc, a));
            prop_assert_eq!(sum, x);
            prop_assert_eq!(b.add(x, x), Elem::ZERO);
        }
        let iso = b.stone_iso().unwrap();
        iso.verify().unwrap();
        let s = Spectrum::compute(&r);
        prop_assert_eq!(b.atoms().len(), s.len());
        prop_assert_eq!(s.connected_components().unwrap().len(), s.len());
    }

    #[test]
    fn spectrum_points_and_atoms(e in any_ring()) {
        let r = build(&e);
        let s = Spectrum::compute(&r);
        for p in s.points() {
            prop_assert!(p.prime.is_prime());
            prop_assert!(!p.prime.contains(p.atom));
            for q in s.points().iter().filter(|q| q.atom != p.atom) {
                prop_assert!(p.prime.contains(q.atom));
            }
        }
        let comps = s.connected_components().unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for c in &comps {
            prop_assert!(c.ideal.is_regular());
            prop_assert!(!c.ideal.quotient_ring().has_nontrivial_idempotents());
            prop_assert_eq!(&s.v(&c.ideal), &c.component);
            prop_assert!(seen.is_disjoint(&c.component));
            seen.extend(c.component.iter().copied());
        }
        prop_assert_eq!(seen, s.all());
        prop_assert_eq!(max_regular_ideals(&r).len(), comps.len());
    }

    #[test]
    fn classification_round_trip_and_wild_criterion(e in product()) {
        let r = build(&e);
        let fs = r.factors().unwrap().to_vec();
        let s = Spectrum::compute(&r);
        for p in s.primes() {
            let all_units_in = (0..fs.len()).all(|k| p.contains(unit_idempotent(&r, k).unwrap()));
            let c = classify_prime(&r, p).unwrap();
            prop_assert_eq!(c == Classification::Wild, all_units_in);
            prop_assert!(!all_units_in);
        }
        for (k, f) in fs.iter().enumerate() {
            for q in Spectrum::compute(f).primes() {
                let p = tame_prime(&r, k, q).unwrap();
                prop_assert_eq!(p.is_maximal(), q.is_maximal());
                match classify_prime(&r, &p).unwrap() {
                    Classification::Tame(w) => {
                        prop_assert_eq!(w.index, k);
                        prop_assert_eq!(&w.factor_prime, q);
                    }
                    Classification::Wild => prop_assert!(false, "tame prime classified wild"),
                }
            }
        }
    }

    #[test]
    fn support_star_laws(e in product(), choice in any::<usize>(), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let r = build(&e);
        let choices = BasePrimeChoice::all(&r).unwrap();
        let base = &choices[choice % choices.len()];
        let n = r.factors().unwrap().len();
        let (a, b, s) = (Elem(x % r.size()), Elem(y % r.size()), Elem(z % r.size()));
        let (sa, sb) = (a_star(&r, a, base), a_star(&r, b, base));
        prop_assert!(sa.intersection(sb).is_subset(a_star(&r, r.add(a, b), base)));
        prop_assert!(sa.is_subset(a_star(&r, r.mul(s, a), base)));
        let sab = a_star(&r, r.mul(a, b), base);
        prop_assert_eq!(sab, sa.union(sb));
        prop_assert_eq!(sab, sa.symmetric_difference(sb).symmetric_difference(sa.intersection(sb)));
        prop_assert!(sa.is_subset(Subset::full(n)));
    }

    #[test]
    fn m_star_depends_only_on_the_chosen_factor_prime(e in product(), i in any::<usize>(), j in any::<usize>()) {
        let r = build(&e);
        let choices = BasePrimeChoice::all(&r).unwrap();
        let (c1, c2) = (&choices[i % choices.len()], &choices[j % choices.len()]);
        let n = r.factors().unwrap().len();
        let set_ring = SetRing::new(n).unwrap();
        for (k, m) in set_ring.primes().iter().enumerate() {
            let (s1, s2) = (m_star(&r, m, c1).unwrap(), m_star(&r, m, c2).unwrap());
            prop_assert_eq!(s1 == s2, c1.primes()[k] == c2.primes()[k]);
            prop_assert_eq!(&spec_to_powerset(&r, &s1).unwrap(), m);
        }
    }

    #[test]
    fn localization_at_a_prime_is_local_over_it(e in small_ring()) {
        let r = build(&e);
        for p in Spectrum::compute(&r).primes() {
            let t = MultiplicativeSet::complement_of_prime(p).unwrap();
            let loc = localize(&t);
            loc.verify().unwrap();
            let l = loc.ring();
            prop_assert!(l.properties().is_local);
            for u in t.elements() {
                prop_assert!(l.is_unit(loc.canonical().apply(u)));
            }
            let m = Ideal::from_predicate(l, |x| !l.is_unit(x)).unwrap();
            prop_assert_eq!(&loc.canonical().preimage(&m).unwrap(), p);
        }
    }

    #[test]
    fn filter_axioms_match_construction(n in 1usize..=3, family in any::<u64>()) {
        let subsets: Vec<Subset> = Subset::all(n).filter(|a| family >> a.0 & 1 == 1).collect();
        let has = |a: Subset| subsets.contains(&a);
        let nonempty = !subsets.is_empty();
        let upward = subsets.iter().all(|&a| Subset::all(n).filter(|b| a.is_subset(*b)).all(has));
        let meets = subsets.iter().all(|&a| subsets.iter().all(|&b| has(a.intersection(b))));
        let proper = !has(Subset::EMPTY);
        let built = Filter::new(n, subsets.iter().copied());
        prop_assert_eq!(built.is_ok(), nonempty && upward && meets && proper);
        if let Ok(f) = built {
            let exactly_one = Subset::all(n).all(|a| f.contains(a) != f.contains(a.complement(n)));
            prop_assert_eq!(f.is_ultrafilter(), exactly_one);
            if f.is_ultrafilter() {
                prop_assert_eq!(f.generator().unwrap().len(), 1);
            }
            for a in Subset::all(n) {
                prop_assert_eq!(f.contains(a), f.generator().unwrap().is_subset(a));
            }
        }
    }

    #[test]
    fn kernel_of_a_local_product_localization_is_the_support_condition(
        ms in prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 5, 8, 9]), 2..=3),
        pick in any::<u64>(),
    ) {
        let e = RingExpr::Prod(ms.iter().map(|&m| RingExpr::ZMod(m)).collect());
        let r = build(&e);
        let n = ms.len();
        let a = Subset((pick % ((1 << n) - 1)) + 1);
        let f = Filter::principal(n, a).unwrap();
        let t = MultiplicativeSet::t_filter(&r, &f).unwrap();
        let loc = localize(&t);
        for x in r.elements() {
            prop_assert_eq!(loc.kernel().contains(x), support(&r, x).intersection(a).is_empty());
        }
    }
}

#[test]
fn power_set_ring_is_regular_and_its_primes_are_principal_ultrafilter_complements() {
    for n in 1..=4 {
        let sr = SetRing::new(n).unwrap();
        let props = sr.ring().properties();
        assert!(props.is_von_neumann_regular);
        assert_eq!(Spectrum::compute(sr.ring()).krull_dim(), 0);
        let primes = sr.primes();
        assert_eq!(Spectrum::compute(sr.ring()).len(), n);
        let ultras = all_ultrafilters(n).unwrap();
        assert_eq!(ultras.len(), n);
        for (k, m) in primes.iter().enumerate() {
            let members: Vec<Subset> = sr.subsets().filter(|&a| !m.contains(sr.elem(a))).collect();
            let f = Filter::new(n, members).unwrap();
            assert!(f.is_ultrafilter());
            assert_eq!(f, principal_ultrafilter(n, k).unwrap());
        }
    }
}
