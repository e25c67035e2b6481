use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prodspec::dsl::{parse, parse_hom};
use prodspec::error::Error;
use prodspec::harness::gen;
use prodspec::{parse_ring, DslError, Limits, RingExpr};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_syntax_round_trips(seed in any::<u64>(), depth in 0u32..4) {
        let e = gen::syntax(&mut ChaCha8Rng::seed_from_u64(seed), depth);
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e.clone());
        let spaced = text.replace(' ', "   ").replace('(', "( ");
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }

    #[test]
    fn hom_syntax_round_trips(seed in any::<u64>(), depth in 0u32..3) {
        let h = gen::hom_syntax(&mut ChaCha8Rng::seed_from_u64(seed), depth);
        prop_assert_eq!(parse_hom(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn garbage_never_panics(text in "[Z/x()0-9, F]{0,16}") {
        let _ = parse(&text);
        let _ = parse_hom(&text);
    }
}

fn semantic(text: &str) -> (String, Error) {
    match parse_ring(text, &Limits::default()) {
        Err(DslError::Semantic { path, error }) => (path, error),
        other => panic!("expected a semantic error for {text}, got {other:?}"),
    }
}

#[test]
fn residue_out_of_range_is_rejected() {
    let (path, error) = semantic("Z/12/(12)");
    assert_eq!(path, "$.gens[0]");
    assert!(matches!(error, Error::BadElement { .. }), "{error}");
}

#[test]
fn tuple_arity_is_checked() {
    let (path, error) = semantic("(Z/4 x Z/6)/((1,2,3))");
    assert_eq!(path, "$.gens[0]");
    assert!(matches!(error, Error::BadElement { .. }), "{error}");
    let (_, error) = semantic("(Z/4 x Z/6)/(2)");
    assert!(matches!(error, Error::BadElement { .. }), "{error}");
}

#[test]
fn zero_ring_factor_points_at_the_factor() {
    let (path, error) = semantic("Z/4 x Z/6/(1)");
    assert_eq!(path, "$.factors[1]");
    assert!(matches!(error, Error::ZeroFactor { index: 1 }), "{error}");
}

#[test]
fn size_guard_reports_the_size() {
    let limits = Limits { max_size: 100, ..Limits::default() };
    match parse_ring("Z/11 x Z/13", &limits) {
        Err(DslError::Semantic { error: Error::TooLarge { size, limit }, .. }) => {
            assert_eq!((size, limit), (143, 100));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn syntax_errors_carry_positions() {
    match parse("Z/4 x\n  Z/") {
        Err(DslError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 5)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse("Z/4 x"), Err(DslError::Syntax { .. })));
    assert!(matches!(parse("Q/4"), Err(DslError::Syntax { .. })));
}

#[test]
fn quotient_binds_tighter_than_product() {
    let e = parse("Z/4 x Z/12/(6)").unwrap();
    let RingExpr::Prod(items) = &e else { panic!("{e:?}") };
    assert_eq!(items[0], RingExpr::ZMod(4));
    assert!(matches!(items[1], RingExpr::Quot(..)));
    assert_eq!(parse_ring("Z/4 x Z/12/(6)", &Limits::default()).unwrap().size(), 24);
}
