//! Oracles shared by the integration tests. Values here are written out by
//! hand and do not call into the library's algorithms.
#![allow(dead_code)]

use aldp_core::classify::PositivityClass;
use aldp_core::rational::{frac, int, Rational};
use aldp_core::surface::BlowUpPoint;
use std::collections::BTreeMap;

/// Hand transcription of the four positivity lists, with the combined
/// `II.4` label used there.
pub fn transcribed_lists() -> BTreeMap<String, Vec<String>> {
    let text = include_str!("../data/positivity_lists.json");
    serde_json::from_str(text).expect("well-formed transcription")
}

/// Catalog family ids a transcribed label stands for.
pub fn expand_label(label: &str) -> Vec<String> {
    match label {
        "II.4" => vec!["II.4A".into(), "II.4B".into()],
        other => vec![other.into()],
    }
}

pub fn expected_classes() -> BTreeMap<String, PositivityClass> {
    let mut out = BTreeMap::new();
    for (class, labels) in transcribed_lists() {
        let c = match class.as_str() {
            "Aleph" => PositivityClass::Aleph,
            "Beth" => PositivityClass::Beth,
            "Gimel" => PositivityClass::Gimel,
            "Daleth" => PositivityClass::Daleth,
            other => panic!("unknown class {other}"),
        };
        for l in labels {
            for id in expand_label(&l) {
                out.insert(id, c);
            }
        }
    }
    out
}

/// Gram matrix of `P^2` (`n = None`) or `F_n` blown up at `k` points, in
/// the basis `H | Z, F` followed by `E_1, ..., E_k`.
pub fn gram_oracle(n: Option<i128>, k: usize) -> Vec<Vec<i128>> {
    let base: Vec<Vec<i128>> = match n {
        None => vec![vec![1]],
        Some(n) => vec![vec![-n, 1], vec![1, 0]],
    };
    let b = base.len();
    let mut g = vec![vec![0; b + k]; b + k];
    for i in 0..b {
        for j in 0..b {
            g[i][j] = base[i][j];
        }
    }
    for i in 0..k {
        g[b + i][b + i] = -1;
    }
    g
}

/// Canonical class coordinates in the same basis.
pub fn canonical_oracle(n: Option<i128>, k: usize) -> Vec<i128> {
    let mut v = match n {
        None => vec![-3],
        Some(n) => vec![-2, -(n + 2)],
    };
    v.extend(std::iter::repeat_n(1, k));
    v
}

pub fn bilinear(g: &[Vec<i128>], a: &[i128], b: &[i128]) -> i128 {
    let mut s = 0;
    for i in 0..a.len() {
        for j in 0..b.len() {
            s += a[i] * g[i][j] * b[j];
        }
    }
    s
}

/// The catalog base of a mutation blown up at its points.
pub fn mutated(m: &Mutation) -> aldp_core::surface::SurfacePair {
    let f = aldp_core::classify::family(m.family).unwrap();
    let base = f.instantiate(m.n, None).ok().unwrap_or_else(|| {
        // Blow-up families need `m`; rebuild the base from the rule.
        let rule = f.blow_up_rule().unwrap();
        aldp_core::classify::family(rule.base).unwrap().instantiate(m.n, None).unwrap()
    });
    base.blow_up(&m.points).unwrap_or_else(|e| panic!("{}: {e}", m.name))
}

/// Coefficients `[c0, c1, c2]` of `(-K - (1 - beta) C)^2` for the
/// one-component families whose square has a closed form.
pub fn expected_square(family: &str, n: i128, m: i128) -> Option<[Rational; 3]> {
    let c = |a: i128, b: i128, q: i128| Some([int(a), int(b), int(q)]);
    match family {
        // (1 + 2b)^2 - m b^2
        "I.6B.m" => c(1, 4, 4 - m),
        // (2 + b)^2 - m b^2
        "I.6C.m" => c(4, 4, 1 - m),
        // 4 + n + 4b - n b^2 - m b^2
        "I.7.n.m" => c(4 + n, 4, -n - m),
        // 2 (1 + b)^2 - m b^2
        "I.9C.m" => c(2, 4, 2 - m),
        // 4b (1 + b) - m b^2
        "I.9B.m" => c(0, 4, 4 - m),
        _ => None,
    }
}

/// A configuration that breaks one genericity clause of a family.
pub struct Mutation {
    pub name: &'static str,
    pub family: &'static str,
    pub n: Option<u32>,
    pub points: Vec<BlowUpPoint>,
}

/// One mutation per documented clause.
pub fn mutations() -> Vec<Mutation> {
    let on = BlowUpPoint::on;
    vec![
        Mutation {
            name: "two points of the (2,1)-curve on one (0,1)-curve",
            family: "I.9B.m",
            n: None,
            points: vec![on(0).in_group(1), on(0).in_group(1)],
        },
        Mutation {
            name: "point at the crossing of section and fiber",
            family: "II.6C.n.m",
            n: Some(1),
            points: vec![BlowUpPoint::crossing(0, 1)],
        },
        Mutation {
            name: "point on the fiber component",
            family: "III.5.n.m",
            n: Some(1),
            points: vec![on(1)],
        },
        Mutation {
            name: "two points on the line",
            family: "II.5A.m",
            n: None,
            points: vec![on(1), on(1)],
        },
        Mutation {
            name: "two points on one line",
            family: "III.4.m",
            n: None,
            points: vec![on(0), on(0)],
        },
        Mutation {
            name: "two points of the sections on one fiber",
            family: "II.6A.n.m",
            n: Some(2),
            points: vec![on(0).in_group(1), on(1).in_group(1)],
        },
        Mutation {
            name: "points of both sections on one fiber",
            family: "II.7.m",
            n: None,
            points: vec![on(0).in_group(1), on(1).in_group(1)],
        },
        Mutation {
            name: "three collinear points of the cubic",
            family: "I.5.m",
            n: None,
            points: vec![on(0).in_group(1), on(0).in_group(1), on(0).in_group(1)],
        },
        Mutation {
            name: "point at the crossing of the two lines",
            family: "II.5B.m",
            n: None,
            points: vec![BlowUpPoint::crossing(0, 1)],
        },
        Mutation {
            name: "point at a crossing of the (2,1)-curve and the fiber",
            family: "II.8.m",
            n: None,
            points: vec![BlowUpPoint::crossing(0, 1)],
        },
    ]
}

/// Blow-up simulation of a germ: smooth branches with coefficients
/// `a_i(lambda) = p_i + lambda q_i` at a fixed `beta`.
///
/// An ordinary `k`-fold point is resolved by one blow-up with exceptional
/// coefficient `sum a_i - 1`. Two branches with contact `t` need `t`
/// blow-ups; after the first, each centre lies on both branches and the
/// latest exceptional curve, whose coefficient feeds into the next one.
/// The germ is log canonical when every coefficient is at most 1. Each
/// coefficient is affine in `lambda`, so the threshold is the least ratio.
pub fn lct_by_blowups(branches: &[(Rational, Rational)], contact: u32) -> Rational {
    // Every coefficient as (constant, slope) in lambda.
    let mut coeffs: Vec<(Rational, Rational)> = branches.to_vec();
    let sum = branches
        .iter()
        .fold((int(0), int(0)), |acc, (p, q)| (acc.0 + p, acc.1 + q));
    if branches.len() >= 2 {
        let mut prev: Option<(Rational, Rational)> = None;
        let steps = if contact >= 2 { contact } else { 1 };
        for _ in 0..steps {
            let mut e = (sum.0 - int(1), sum.1);
            if let Some(p) = prev {
                e = (e.0 + p.0, e.1 + p.1);
            }
            coeffs.push(e);
            prev = Some(e);
        }
    }
    coeffs
        .into_iter()
        .filter(|(_, q)| *q > int(0))
        .map(|(p, q)| (int(1) - p) / q)
        .min()
        .expect("some coefficient grows with lambda")
}

/// Twenty distinct rationals in `(0, 1)` from a fixed linear congruential walk.
pub fn sample_betas() -> Vec<Rational> {
    let mut out = Vec::new();
    let mut x: i128 = 7;
    while out.len() < 20 {
        x = (x * 1103515245 + 12345) % 2147483648;
        let q = frac(1 + x % 997, 1000);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

use aldp_core::surface::{dual_graph, test_curves, CurveKind, SurfacePair};
use aldp_core::verifier::is_minimal;

/// Violations of the structural lemmas for one strong-positive pair of the
/// given class; empty when all hold.
pub fn structural_violations(pair: &SurfacePair, class: PositivityClass) -> Vec<String> {
    let mut out = Vec::new();
    let label = pair.provenance().map(|p| p.label()).unwrap_or_default();
    let set = test_curves(pair).expect("inventory");
    let c = pair.boundary_sum();
    for t in set.explicit.iter().filter(|t| t.kind != CurveKind::Boundary) {
        if t.class.self_intersection() == int(-1) && t.class.arithmetic_genus() == int(0) {
            let meets = t.class.intersect(&c).unwrap();
            if meets > int(1) {
                out.push(format!("{label}: {} meets the boundary {meets} times", t.label));
            }
        }
    }
    let r = pair.component_count();
    if r == 1 && !set.del_pezzo && is_minimal(pair).unwrap().minimal {
        let sq = pair.boundary()[0].self_intersection();
        if sq > int(-2) {
            out.push(format!("{label}: minimal non-del-Pezzo boundary has square {sq}"));
        }
    }
    if r >= 2 {
        let g = dual_graph(pair);
        let ok = if class == PositivityClass::Aleph { g.is_chains() || g.is_cycle() } else { g.is_chains() };
        if !ok {
            out.push(format!("{label}: dual graph {:?} is not allowed for {class}", g.edges));
        }
        for v in 0..r {
            let sq = pair.boundary()[v].self_intersection();
            if g.degree(v) >= 2 && sq < int(0) {
                out.push(format!("{label}: C{} meets {} others with square {sq}", v + 1, g.degree(v)));
            }
        }
    }
    out
}
