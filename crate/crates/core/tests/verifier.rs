mod common;

use aldp_core::classify::{family, families, sample_parameters};
use aldp_core::lattice::{SmallBetaVerdict, WitnessPath};
use aldp_core::rational::{frac, int, Rational};
use aldp_core::surface::SurfacePair;
use aldp_core::verifier::{is_minimal, minimal_model, verify, verify_at, CertifiedScope};
use common::{expected_square, mutated, mutations};
use proptest::prelude::*;

#[test]
fn every_mutation_fails_with_a_witness() {
    for m in mutations() {
        let pair = mutated(&m);
        let v = verify(&pair).unwrap_or_else(|e| panic!("{}: {e}", m.name));
        assert_eq!(v.strong, SmallBetaVerdict::NotPositive, "{}", m.name);
        let f = v.failing_inequality.expect("failure recorded");
        assert!(f.class.is_some() || f.witness.is_some(), "{}", m.name);
    }
}

#[test]
fn section_with_two_fibers() {
    for n in 0..=4u32 {
        let pair = SurfacePair::make_fn(n, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        let v = verify(&pair).unwrap();
        if n == 0 {
            // `b1 + b2 > 0` always holds on the quadric.
            assert_eq!(v.strong, SmallBetaVerdict::Positive);
            continue;
        }
        assert_eq!(v.strong, SmallBetaVerdict::NotPositive, "n = {n}");
        let f = v.failing_inequality.unwrap();
        let expected = if n == 1 { "b1 + b2 - b3".to_string() } else { format!("b1 + b2 - {n}*b3") };
        assert_eq!(f.polynomial.to_text(), expected);
        let diag = if n == 1 { SmallBetaVerdict::Positive } else { SmallBetaVerdict::NotPositive };
        assert_eq!(v.diagonal, diag, "n = {n}");
    }
}

#[test]
fn strong_implies_diagonal_over_the_catalog() {
    for f in families() {
        for (n, m) in sample_parameters(f, 2, 6) {
            let v = verify(&f.instantiate(n, m).unwrap()).unwrap();
            assert_eq!(v.strong, SmallBetaVerdict::Positive, "{}", f.id);
            assert_eq!(v.diagonal, SmallBetaVerdict::Positive, "{}", f.id);
            assert_eq!(v.certified_scope, CertifiedScope::CatalogComplete);
        }
    }
}

#[test]
fn closed_form_squares() {
    for id in ["I.6B.m", "I.6C.m", "I.7.n.m", "I.9C.m", "I.9B.m"] {
        let f = family(id).unwrap();
        for (n, m) in sample_parameters(f, 3, 12) {
            let pair = f.instantiate(n, m).unwrap();
            let sq = verify(&pair).unwrap().square;
            let want = expected_square(id, n.unwrap_or(0) as i128, m.unwrap() as i128).unwrap();
            assert_eq!(sq.diagonal(), want, "{id} n={n:?} m={m:?}");
        }
    }
}

#[test]
fn anticanonical_boundaries_are_ample_at_full_weight() {
    let classes = common::expected_classes();
    for f in families() {
        if classes[f.id] != aldp_core::classify::PositivityClass::Aleph {
            continue;
        }
        for (n, m) in sample_parameters(f, 1, 8) {
            let pair = f.instantiate(n, m).unwrap();
            let ones = vec![int(1); pair.component_count()];
            assert_eq!(verify_at(&pair, &ones).unwrap().verdict, SmallBetaVerdict::Positive, "{}", f.id);
        }
    }
}

#[test]
fn contraction_keeps_positivity() {
    for f in families().iter().filter(|f| f.takes_m()) {
        for (n, m) in sample_parameters(f, 1, 5) {
            let pair = f.instantiate(n, m).unwrap();
            let (base, _) = minimal_model(&pair).unwrap();
            assert_eq!(verify(&base).unwrap().strong, SmallBetaVerdict::Positive, "{}", f.id);
            let smaller = pair.without_point(0).unwrap();
            assert_eq!(verify(&smaller).unwrap().strong, SmallBetaVerdict::Positive, "{}", f.id);
        }
    }
}

#[test]
fn minimality_examples() {
    let p = family("I.6B.m").unwrap().instantiate(None, Some(1)).unwrap();
    let r = is_minimal(&p).unwrap();
    assert!(!r.minimal);
    assert_eq!(r.offending.unwrap().label, "E1");
    assert!(is_minimal(&family("I.1B").unwrap().instantiate(None, None).unwrap()).unwrap().minimal);
}

#[test]
fn failures_carry_usable_witnesses() {
    // Along the witness path the failing polynomial is not positive near 0.
    for m in mutations() {
        let v = verify(&mutated(&m)).unwrap();
        let f = v.failing_inequality.unwrap();
        if let Some(w) = f.witness {
            let restricted = w.path.restrict(&f.polynomial);
            let lowest = restricted.iter().find(|c| **c != int(0));
            assert!(lowest.is_none_or(|c| *c < int(0)), "{}", m.name);
        }
    }
}

proptest! {
    #[test]
    fn fixed_small_weights_agree_with_the_germ(m in 1u32..=8, k in 1i128..=4) {
        // Weights 1/(50 k) are inside the small range for these families.
        let f = family("I.9B.m").unwrap();
        let pair = f.instantiate(None, Some(m)).unwrap();
        let b: Rational = frac(1, 50 * k);
        prop_assert_eq!(verify_at(&pair, &[b]).unwrap().verdict, SmallBetaVerdict::Positive);
    }

    #[test]
    fn diagonal_witness_is_uniform(r in 1usize..=4) {
        let p = WitnessPath::diagonal(r);
        prop_assert_eq!(p.point(frac(1, 3)), vec![frac(1, 3); r]);
    }
}
