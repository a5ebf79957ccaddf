#![allow(clippy::needless_range_loop)]

mod common;

use aldp_core::lattice::{small_beta_sign, BetaPolynomial, DivisorClass, PicardBasis, SignMode, SmallBetaVerdict};
use aldp_core::rational::{int, Rational};
use common::{bilinear, canonical_oracle, gram_oracle};
use proptest::prelude::*;
use std::sync::Arc;

fn basis(n: Option<u32>, k: usize) -> Arc<PicardBasis> {
    let base = match n {
        None => PicardBasis::p2(),
        Some(n) => PicardBasis::hirzebruch(n),
    };
    if k == 0 {
        base
    } else {
        PicardBasis::blow_up(&base, k).unwrap()
    }
}

fn model() -> impl Strategy<Value = Option<u32>> {
    prop_oneof![Just(None), (0u32..=5).prop_map(Some)]
}

fn coords(len: usize) -> impl Strategy<Value = Vec<i128>> {
    proptest::collection::vec(-6i128..=6, len)
}

fn class(b: &Arc<PicardBasis>, v: &[i128]) -> DivisorClass {
    DivisorClass::from_ints(b, v).unwrap()
}

#[test]
fn gram_matches_oracle() {
    for n in [None, Some(0), Some(1), Some(3)] {
        for k in 0..5 {
            let b = basis(n, k);
            let g = gram_oracle(n.map(|x| x as i128), k);
            for i in 0..b.rank() {
                for j in 0..b.rank() {
                    assert_eq!(b.gram(i, j), g[i][j]);
                }
            }
            let kc: Vec<i128> = b.canonical_coords().iter().map(|c| *c.numer()).collect();
            assert_eq!(kc, canonical_oracle(n.map(|x| x as i128), k));
        }
    }
}

#[test]
fn canonical_degrees() {
    for k in 0..9 {
        assert_eq!(DivisorClass::canonical(&basis(None, k)).self_intersection(), int(9 - k as i128));
        assert_eq!(DivisorClass::canonical(&basis(Some(2), k)).self_intersection(), int(8 - k as i128));
    }
}

#[test]
fn exceptional_curves_are_minus_one_curves() {
    let b = basis(Some(1), 3);
    for i in 0..3 {
        let e = DivisorClass::exceptional(&b, i);
        assert_eq!(e.self_intersection(), int(-1));
        assert_eq!(e.arithmetic_genus(), int(0));
        assert_eq!(e.intersect(&DivisorClass::canonical(&b)).unwrap(), int(-1));
    }
}

#[test]
fn plane_curve_genus() {
    let b = basis(None, 0);
    for d in 1..8i128 {
        assert_eq!(class(&b, &[d]).arithmetic_genus(), int((d - 1) * (d - 2) / 2));
    }
}

#[test]
fn mismatched_bases_are_errors() {
    let a = class(&basis(None, 1), &[1, 0]);
    let b = class(&basis(Some(0), 0), &[1, 0]);
    assert!(a.intersect(&b).is_err());
}

#[test]
fn text_forms() {
    let b = basis(Some(0), 2);
    assert_eq!(class(&b, &[2, 1, -1, 0]).to_text(), "2Z + F - E1");
    assert_eq!(class(&b, &[0, 0, 0, 0]).to_text(), "0");
}

proptest! {
    #[test]
    fn pairing_agrees_with_oracle(n in model(), k in 0usize..5, seed in coords(16)) {
        let b = basis(n, k);
        let r = b.rank();
        let (u, w) = (&seed[..r], &seed[8..8 + r]);
        let g = gram_oracle(n.map(|x| x as i128), k);
        prop_assert_eq!(class(&b, u).intersect(&class(&b, w)).unwrap(), int(bilinear(&g, u, w)));
    }

    #[test]
    fn pairing_is_symmetric_and_bilinear(n in model(), k in 0usize..4, seed in coords(24), s in -4i128..=4) {
        let b = basis(n, k);
        let r = b.rank();
        let (x, y, z) = (class(&b, &seed[..r]), class(&b, &seed[8..8 + r]), class(&b, &seed[16..16 + r]));
        prop_assert_eq!(x.intersect(&y).unwrap(), y.intersect(&x).unwrap());
        let lhs = (&x + &y.scale(int(s))).intersect(&z).unwrap();
        prop_assert_eq!(lhs, x.intersect(&z).unwrap() + int(s) * y.intersect(&z).unwrap());
    }

    #[test]
    fn genus_and_euler_characteristic(n in model(), k in 0usize..4, seed in coords(8)) {
        let b = basis(n, k);
        let d = class(&b, &seed[..b.rank()]);
        let kk = DivisorClass::canonical(&b);
        // Serre duality: chi(D) = chi(K - D).
        prop_assert_eq!(d.euler_characteristic(), (&kk - &d).euler_characteristic());
        prop_assert_eq!(d.arithmetic_genus() + d.euler_characteristic(), int(2) + d.self_intersection());
        prop_assert!(d.arithmetic_genus().is_integer());
    }

    #[test]
    fn pullback_preserves_pairing(n in model(), k in 1usize..4, seed in coords(16)) {
        let base = basis(n, 0);
        let up = basis(n, k);
        let r = base.rank();
        let (x, y) = (class(&base, &seed[..r]), class(&base, &seed[8..8 + r]));
        let (px, py) = (x.pullback(&up).unwrap(), y.pullback(&up).unwrap());
        prop_assert_eq!(px.intersect(&py).unwrap(), x.intersect(&y).unwrap());
        prop_assert_eq!(px.intersect(&DivisorClass::exceptional(&up, 0)).unwrap(), int(0));
        prop_assert_eq!(px.push_forward(&base, &(r..r + k).collect::<Vec<_>>()).unwrap(), x);
    }
}

fn poly() -> impl Strategy<Value = BetaPolynomial> {
    (1usize..=3).prop_flat_map(|vars| {
        (
            -3i128..=3,
            proptest::collection::vec(-3i128..=3, vars),
            proptest::collection::vec(-3i128..=3, vars * (vars + 1) / 2),
        )
            .prop_map(move |(c, lin, quad)| {
                let mut terms = Vec::new();
                let mut it = quad.into_iter();
                for i in 0..vars {
                    for j in i..vars {
                        terms.push(((i, j), int(it.next().unwrap())));
                    }
                }
                BetaPolynomial::from_parts(int(c), lin.into_iter().map(int).collect(), &terms)
            })
    })
}

/// Lowest nonzero coefficient along `beta_i = c_i t^e_i`.
fn lowest_along(p: &BetaPolynomial, coeffs: &[Rational], exps: &[u32]) -> Option<Rational> {
    let path = aldp_core::lattice::WitnessPath {
        coeffs: coeffs.to_vec(),
        exponents: exps.to_vec(),
    };
    path.restrict(p).into_iter().find(|c| *c != int(0))
}

proptest! {
    #[test]
    fn orthant_positive_means_positive_on_every_monomial_path(
        p in poly(),
        cs in proptest::collection::vec(1i128..=5, 3),
        es in proptest::collection::vec(1u32..=3, 3),
    ) {
        let v = p.vars();
        let d = small_beta_sign(&p, SignMode::Orthant);
        let coeffs: Vec<Rational> = cs[..v].iter().copied().map(int).collect();
        let low = lowest_along(&p, &coeffs, &es[..v]);
        match d.verdict {
            SmallBetaVerdict::Positive => prop_assert!(low.is_some_and(|c| c > int(0))),
            SmallBetaVerdict::NonNegative => prop_assert!(low.is_none_or(|c| c > int(0))),
            SmallBetaVerdict::NotPositive => {
                let w = d.witness.expect("witness for a failure");
                let along = w.path.restrict(&p).into_iter().find(|c| *c != int(0));
                prop_assert!(along.is_none_or(|c| c < int(0)));
            }
            SmallBetaVerdict::Indeterminate => {}
        }
    }

    #[test]
    fn orthant_positive_implies_diagonal_positive(p in poly()) {
        if small_beta_sign(&p, SignMode::Orthant).verdict == SmallBetaVerdict::Positive {
            prop_assert_eq!(small_beta_sign(&p, SignMode::Diagonal).verdict, SmallBetaVerdict::Positive);
        }
    }

    #[test]
    fn diagonal_mode_reads_the_lowest_uniform_coefficient(p in poly()) {
        let v = p.vars();
        let low = lowest_along(&p, &vec![int(1); v], &vec![1; v]);
        let want = match low {
            None => SmallBetaVerdict::NonNegative,
            Some(c) if c > int(0) => SmallBetaVerdict::Positive,
            Some(_) => SmallBetaVerdict::NotPositive,
        };
        prop_assert_eq!(small_beta_sign(&p, SignMode::Diagonal).verdict, want);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in -3i128..=3, x in proptest::collection::vec(-4i128..=4, 3)) {
        let v = a.vars();
        let pt: Vec<Rational> = x[..v].iter().copied().map(int).collect();
        let lin = BetaPolynomial::var(v, 0).scale(int(b)) + BetaPolynomial::integer(v, 1);
        let sum = a.checked_add(&lin).unwrap();
        prop_assert_eq!(sum.eval(&pt), a.eval(&pt) + lin.eval(&pt));
        if a.degree().unwrap_or(0) <= 1 {
            let prod = a.checked_mul(&lin).unwrap();
            prop_assert_eq!(prod.eval(&pt), a.eval(&pt) * lin.eval(&pt));
        }
    }
}

#[test]
fn degree_overflow_is_reported() {
    let b = BetaPolynomial::var(1, 0);
    let sq = b.checked_mul(&b).unwrap();
    assert!(sq.checked_mul(&b).is_err());
}

#[test]
fn sign_examples() {
    let b1 = BetaPolynomial::var(2, 0);
    let b2 = BetaPolynomial::var(2, 1);
    let p = &b1 - &b2;
    assert_eq!(small_beta_sign(&p, SignMode::Orthant).verdict, SmallBetaVerdict::NotPositive);
    assert_eq!(small_beta_sign(&p, SignMode::Diagonal).verdict, SmallBetaVerdict::NonNegative);
    let q = &b1 + &b2;
    assert_eq!(small_beta_sign(&q, SignMode::Orthant).verdict, SmallBetaVerdict::Positive);
    let c = BetaPolynomial::integer(2, -1) + b1.clone();
    assert_eq!(small_beta_sign(&c, SignMode::Orthant).verdict, SmallBetaVerdict::NotPositive);
}
