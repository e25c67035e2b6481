use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prodspec::harness::gen;
use prodspec::ideal::{jacobson_radical, nilradical};
use prodspec::{Elem, Fixture, Ideal, Limits, Ring, RingExpr};

fn factor() -> impl Strategy<Value = RingExpr> {
    prop_oneof![
        4 => (2u64..=9).prop_map(RingExpr::ZMod),
        1 => prop::sample::select(vec![Fixture::F4, Fixture::F2e, Fixture::F2xy, Fixture::Z4x, Fixture::F9])
            .prop_map(RingExpr::Fixture),
    ]
}

fn product() -> impl Strategy<Value = RingExpr> {
    prop::collection::vec(factor(), 2..=3).prop_map(RingExpr::Prod)
}

fn any_ring() -> impl Strategy<Value = RingExpr> {
    prop_oneof![factor(), product()]
}

fn build(e: &RingExpr) -> Arc<Ring> {
    e.elaborate(&Limits::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_operations_are_componentwise(e in product(), x in any::<u64>(), y in any::<u64>()) {
        let r = build(&e);
        let fs = r.factors().unwrap().to_vec();
        prop_assert_eq!(r.size(), fs.iter().map(|f| f.size()).product::<u64>());
        let (a, b) = (Elem(x % r.size()), Elem(y % r.size()));
        let (ca, cb) = (r.components(a), r.components(b));
        let sum: Vec<Elem> = fs.iter().enumerate().map(|(k, f)| f.add(ca[k], cb[k])).collect();
        let prod: Vec<Elem> = fs.iter().enumerate().map(|(k, f)| f.mul(ca[k], cb[k])).collect();
        prop_assert_eq!(r.components(r.add(a, b)), sum);
        prop_assert_eq!(r.components(r.mul(a, b)), prod);
        prop_assert_eq!(r.from_components(&ca), a);
    }

    #[test]
    fn idempotents_are_closed_under_complement_and_product(e in any_ring()) {
        let r = build(&e);
        let idem = r.idempotents();
        for &x in &idem {
            prop_assert_eq!(r.mul(x, x), x);
            prop_assert!(idem.contains(&r.sub(r.one(), x)));
            for &y in &idem {
                prop_assert!(idem.contains(&r.mul(x, y)));
            }
        }
    }

    #[test]
    fn quotient_classes_are_cosets(a in 2u64..=12, b in 2u64..=12, g in any::<u64>()) {
        let base = build(&RingExpr::Prod(vec![RingExpr::ZMod(a), RingExpr::ZMod(b)]));
        let g = Elem(g % base.size());
        let ideal = Ideal::closure(&base, &[g]);
        let q = ideal.quotient_ring();
        prop_assert_eq!(q.size() * ideal.len(), base.size());
        for x in base.elements() {
            for y in base.elements() {
                let same = q.class_of(x) == q.class_of(y);
                prop_assert_eq!(same, ideal.contains(base.sub(x, y)));
            }
        }
    }

    #[test]
    fn induced_hom_kernel_and_image_are_products(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = gen::hom_family(&mut rng, 256);
        let limits = Limits::default();
        let family = h.family(&limits).unwrap();
        let phi = h.elaborate(&limits).unwrap();
        let kernels: Vec<Ideal> = family.iter().map(|f| f.kernel()).collect();
        let images: Vec<_> = family.iter().map(|f| f.image_mask()).collect();
        let analysis = phi.analysis();
        let (src, tgt) = (phi.source().clone(), phi.target().clone());
        for a in src.elements() {
            let expected = (0..family.len()).all(|k| kernels[k].contains(src.component(a, k)));
            prop_assert_eq!(analysis.kernel.contains(a), expected);
        }
        let image = phi.image_mask();
        for b in tgt.elements() {
            let expected = (0..family.len()).all(|k| images[k].contains(tgt.component(b, k).index()));
            prop_assert_eq!(image.contains(b.index()), expected);
        }
        prop_assert_eq!(analysis.is_injective, family.iter().all(|f| f.is_injective()));
        prop_assert_eq!(analysis.is_surjective, family.iter().all(|f| f.is_surjective()));
    }

    #[test]
    fn radical_laws(e in any_ring()) {
        let r = build(&e);
        let n = nilradical(&r);
        prop_assert_eq!(&n, &Ideal::zero(&r).radical());
        prop_assert!(n.is_subset(&jacobson_radical(&r)));
        for a in r.elements() {
            prop_assert_eq!(n.contains(a), r.is_nilpotent(a));
        }
    }

    #[test]
    fn ideals_are_closed_and_proper_iff_one_missing(e in any_ring(), g in any::<u64>(), h in any::<u64>()) {
        let r = build(&e);
        let gens = [Elem(g % r.size()), Elem(h % r.size())];
        let i = Ideal::closure(&r, &gens);
        prop_assert!(i.contains(Elem::ZERO));
        prop_assert!(gens.iter().all(|&x| i.contains(x)));
        prop_assert_eq!(i.is_proper(), !i.contains(r.one()));
        for x in i.elements() {
            for y in i.elements() {
                prop_assert!(i.contains(r.add(x, y)));
            }
            for s in r.elements() {
                prop_assert!(i.contains(r.mul(s, x)));
            }
        }
    }
}

#[test]
fn zero_ring_is_rejected_as_a_factor() {
    let zero = Ring::modular(1).unwrap();
    assert!(zero.is_zero_ring());
    assert!(Ring::product(vec![Ring::modular(2).unwrap(), zero]).is_err());
}
