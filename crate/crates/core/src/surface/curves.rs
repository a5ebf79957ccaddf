//! Curve inventories and the family-level bounds that make a finite
//! ampleness check sound.
//!
//! A curve `Z` on the blow-up is either in the explicit list or is the
//! proper transform of a base curve `z` whose multiplicities at the blown-up
//! points are bounded by `G.z` for a pencil or very ample class `G`.
//! Substituting the bound into `D.Z = D_base.z - sum e_i mult_i(z)` leaves
//! finitely many polynomial inequalities.

use super::{SurfaceError, SurfacePair};
use crate::lattice::{BaseModel, BetaDivisor, BetaPolynomial, DivisorClass};
use crate::rational::int;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CurveKind {
    Exceptional,
    Boundary,
    /// A general fiber of `F_n`, or a general line of `P^2`.
    GeneralFiber,
    /// The fiber (on `P^2`: a line) through the listed points.
    FiberThrough,
    /// The negative section `Z_n`, or a general `Z`-ruling line on `F_0`.
    NegativeSection,
    /// A `Z`-ruling line of `F_0` through one point.
    OtherRulingThrough,
    /// A line of `P^2` through two points.
    LineThrough,
    /// A conic of `P^2` through five points.
    ConicThrough,
    /// A curve in `|Z + F|` through two (`F_1`) or three (`F_0`) points.
    SectionThrough,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TestCurve {
    pub label: String,
    #[serde(serialize_with = "crate::surface::json::class_text")]
    pub class: DivisorClass,
    pub kind: CurveKind,
    pub points: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CertificateKind {
    /// `mult_P(z) <= F.z` from the fiber through `P` (`F_n` base).
    FiberBound,
    /// `mult_P(z) <= (Z + (n+1)F).z` from the very ample class (`F_n` base).
    VeryAmpleBound,
    /// `mult_P(z) <= H.z` from a line through `P` (`P^2` base).
    LineBound,
    /// `D = sum lambda_j C_j` with `C ~ -K_S` on a del Pezzo surface: every
    /// curve off the boundary meets it, so `D.Z >= min lambda_j`.
    AnticanonicalBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Requirement {
    Positive,
    NonNegative,
}

/// A sufficient condition, covering every curve outside the explicit list,
/// reduced to inequalities on the weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub family: String,
    #[serde(serialize_with = "crate::surface::json::opt_class_text")]
    pub bounding_class: Option<DivisorClass>,
    pub inequalities: Vec<(String, BetaPolynomial, Requirement)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TestCurveSet {
    pub explicit: Vec<TestCurve>,
    /// Bounds that apply to the pair's model, instantiated per divisor by
    /// [`TestCurveSet::certificates`].
    pub generic: Vec<CertificateKind>,
    /// `-K_S` is positive on every explicit curve and `K_S^2 > 0`, and the
    /// model admits a del Pezzo surface with this incidence in general position.
    pub del_pezzo: bool,
}

fn plabel(points: &[usize]) -> String {
    points
        .iter()
        .map(|i| format!("P{}", i + 1))
        .collect::<Vec<_>>()
        .join(",")
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Largest point count for which curves through point subsets are listed.
const SUBSET_CURVE_LIMIT: usize = 8;

/// Builds the explicit curve inventory of a pair.
pub fn test_curves(pair: &SurfacePair) -> Result<TestCurveSet, SurfaceError> {
    if pair.basis().depth() > 1 {
        return Err(SurfaceError::UnsupportedTower(format!(
            "{} has nested blow-ups",
            pair.basis()
        )));
    }
    let m = pair.points().len();
    let boundary = pair.boundary();
    let base = pair.base_basis();
    let mut list: Vec<TestCurve> = Vec::new();
    let curve_through = |base_class: &DivisorClass, pts: &[usize]| -> DivisorClass {
        pts.iter()
            .fold(pair.pullback(base_class), |acc, &i| &acc - &pair.exceptional(i))
    };

    for i in 0..m {
        list.push(TestCurve {
            label: format!("E{}", i + 1),
            class: pair.exceptional(i),
            kind: CurveKind::Exceptional,
            points: vec![i],
        });
    }
    for (j, c) in boundary.iter().enumerate() {
        list.push(TestCurve {
            label: format!("C{}", j + 1),
            class: c.clone(),
            kind: CurveKind::Boundary,
            points: pair.points_on(j),
        });
    }

    let pencil = pair.pencil_class();
    let pencil_components: Vec<usize> = (0..boundary.len())
        .filter(|&j| pair.base_boundary()[j] == pencil)
        .collect();
    list.push(TestCurve {
        label: match pair.model() {
            BaseModel::P2 => "general line".into(),
            BaseModel::Fn(_) => "general fiber".into(),
        },
        class: pair.pullback(&pencil),
        kind: CurveKind::GeneralFiber,
        points: vec![],
    });
    // Fibers (lines) through points, one per group.
    let mut keyed: BTreeMap<(u8, usize), Vec<usize>> = BTreeMap::new();
    for (i, p) in pair.points().iter().enumerate() {
        if p.on.iter().any(|j| pencil_components.contains(j)) {
            continue;
        }
        match p.fiber_group {
            Some(g) => keyed.entry((0, g as usize)).or_default().push(i),
            None => keyed.entry((1, i)).or_default().push(i),
        }
    }
    for pts in keyed.values() {
        list.push(TestCurve {
            label: match pair.model() {
                BaseModel::P2 => format!("line through {}", plabel(pts)),
                BaseModel::Fn(_) => format!("fiber through {}", plabel(pts)),
            },
            class: curve_through(&pencil, pts),
            kind: CurveKind::FiberThrough,
            points: pts.clone(),
        });
    }

    let mut extra: Vec<TestCurve> = Vec::new();
    match pair.model() {
        BaseModel::P2 => {
            let h = DivisorClass::generator(base, 0);
            let same_line = |a: usize, b: usize| {
                let pa = &pair.points()[a];
                let pb = &pair.points()[b];
                let grouped = pa.fiber_group.is_some() && pa.fiber_group == pb.fiber_group;
                let on_line = pa
                    .on
                    .iter()
                    .any(|j| pb.on.contains(j) && pencil_components.contains(j));
                grouped || on_line
            };
            for s in subsets(m, 2) {
                if !same_line(s[0], s[1]) {
                    extra.push(TestCurve {
                        label: format!("line through {}", plabel(&s)),
                        class: curve_through(&h, &s),
                        kind: CurveKind::LineThrough,
                        points: s,
                    });
                }
            }
            if m <= SUBSET_CURVE_LIMIT {
                let conic = h.scale(int(2));
                let conic_components: Vec<usize> = (0..boundary.len())
                    .filter(|&j| pair.base_boundary()[j] == conic)
                    .collect();
                for s in subsets(m, 5) {
                    let on_boundary_conic = conic_components
                        .iter()
                        .any(|j| s.iter().all(|&i| pair.points()[i].on.contains(j)));
                    if !on_boundary_conic {
                        extra.push(TestCurve {
                            label: format!("conic through {}", plabel(&s)),
                            class: curve_through(&conic, &s),
                            kind: CurveKind::ConicThrough,
                            points: s,
                        });
                    }
                }
            }
        }
        BaseModel::Fn(n) => {
            let z = DivisorClass::generator(base, 0);
            let f = DivisorClass::generator(base, 1);
            let z_components: Vec<usize> = (0..boundary.len())
                .filter(|&j| pair.base_boundary()[j] == z)
                .collect();
            if n > 0 {
                if z_components.is_empty() {
                    list.push(TestCurve {
                        label: format!("Z{n}"),
                        class: pair.pullback(&z),
                        kind: CurveKind::NegativeSection,
                        points: vec![],
                    });
                }
            } else {
                list.push(TestCurve {
                    label: "general Z-line".into(),
                    class: pair.pullback(&z),
                    kind: CurveKind::NegativeSection,
                    points: vec![],
                });
                for (i, p) in pair.points().iter().enumerate() {
                    if !p.on.iter().any(|j| z_components.contains(j)) {
                        list.push(TestCurve {
                            label: format!("Z-line through P{}", i + 1),
                            class: curve_through(&z, &[i]),
                            kind: CurveKind::OtherRulingThrough,
                            points: vec![i],
                        });
                    }
                }
            }
            let section = &z + &f;
            let count = match n {
                0 => 3,
                1 => 2,
                _ => 0,
            };
            if count > 0 && m <= SUBSET_CURVE_LIMIT {
                for s in subsets(m, count) {
                    extra.push(TestCurve {
                        label: format!("(Z+F)-curve through {}", plabel(&s)),
                        class: curve_through(&section, &s),
                        kind: CurveKind::SectionThrough,
                        points: s,
                    });
                }
            }
        }
    }

    // Keep candidates that cannot be forced to split off a known curve.
    let known: Vec<DivisorClass> = list
        .iter()
        .filter(|c| {
            matches!(
                c.kind,
                CurveKind::Boundary | CurveKind::Exceptional | CurveKind::FiberThrough
            )
        })
        .map(|c| c.class.clone())
        .collect();
    for cand in extra {
        let splits = known
            .iter()
            .any(|k| k != &cand.class && cand.class.intersect(k).expect("same lattice") < int(0));
        let duplicate = list.iter().any(|c| c.class == cand.class);
        if !splits && !duplicate {
            list.push(cand);
        }
    }

    let mut generic = match pair.model() {
        BaseModel::P2 => vec![CertificateKind::LineBound],
        BaseModel::Fn(_) => vec![CertificateKind::FiberBound, CertificateKind::VeryAmpleBound],
    };
    let anti = -&pair.canonical();
    let del_pezzo = anti.self_intersection() > int(0)
        && !matches!(pair.model(), BaseModel::Fn(n) if n >= 2)
        && list.iter().all(|c| anti.intersect(&c.class).expect("same lattice") > int(0));
    if del_pezzo && pair.boundary_sum() == anti {
        generic.push(CertificateKind::AnticanonicalBoundary);
    }
    Ok(TestCurveSet {
        explicit: list,
        generic,
        del_pezzo,
    })
}

impl TestCurveSet {
    /// Instantiates the generic bounds for the divisor `d`.
    ///
    /// `boundary_weights`, when given, expresses `d` as a combination of the
    /// boundary proper transforms; it is checked, not trusted.
    pub fn certificates(
        &self,
        pair: &SurfacePair,
        d: &BetaDivisor,
        boundary_weights: Option<&[BetaPolynomial]>,
    ) -> Vec<Certificate> {
        let vars = d.vars();
        let b = pair.model().rank();
        let m = pair.points().len();
        // d = pi^* d_base - sum e_i E_i
        let e: Vec<BetaPolynomial> = (0..m).map(|i| -d.coord(b + i)).collect();
        let sum_e = e.iter().fold(BetaPolynomial::zero(vars), |a, x| &a + x);
        let e_nonneg = |out: &mut Vec<(String, BetaPolynomial, Requirement)>| {
            for (i, ei) in e.iter().enumerate() {
                out.push((format!("coefficient of E{}", i + 1), ei.clone(), Requirement::NonNegative));
            }
        };
        let base = pair.base_basis();
        let mut out = Vec::new();
        for kind in &self.generic {
            match (kind, pair.model()) {
                (CertificateKind::LineBound, BaseModel::P2) => {
                    let x = d.coord(0);
                    let mut ineq = vec![(
                        "degree minus total multiplicity weight".to_string(),
                        x - &sum_e,
                        Requirement::Positive,
                    )];
                    e_nonneg(&mut ineq);
                    out.push(Certificate {
                        kind: *kind,
                        family: "curves of degree d >= 1 with mult <= d at each point".into(),
                        bounding_class: Some(DivisorClass::generator(base, 0)),
                        inequalities: ineq,
                    });
                }
                (CertificateKind::FiberBound, BaseModel::Fn(_)) => {
                    let (x, y) = (d.coord(0), d.coord(1));
                    let mut ineq = vec![
                        ("F-coefficient minus multiplicity weight".to_string(), y - &sum_e, Requirement::Positive),
                        ("Z-coefficient".to_string(), x.clone(), Requirement::NonNegative),
                    ];
                    e_nonneg(&mut ineq);
                    out.push(Certificate {
                        kind: *kind,
                        family: "curves aZ + bF with a >= 1, b >= na, mult <= a".into(),
                        bounding_class: Some(DivisorClass::generator(base, 1)),
                        inequalities: ineq,
                    });
                }
                (CertificateKind::VeryAmpleBound, BaseModel::Fn(n)) => {
                    let (x, y) = (d.coord(0), d.coord(1));
                    let scaled = sum_e.scale(int(n as i128 + 1));
                    let mut ineq = vec![
                        ("F-coefficient minus (n+1) multiplicity weight".to_string(), y - &scaled, Requirement::Positive),
                        ("Z-coefficient minus multiplicity weight".to_string(), x - &sum_e, Requirement::NonNegative),
                    ];
                    e_nonneg(&mut ineq);
                    out.push(Certificate {
                        kind: *kind,
                        family: "curves aZ + bF with a >= 1, b >= na, mult <= a + b".into(),
                        bounding_class: Some(
                            DivisorClass::from_ints(base, &[1, n as i128 + 1]).expect("rank 2"),
                        ),
                        inequalities: ineq,
                    });
                }
                (CertificateKind::AnticanonicalBoundary, _) => {
                    let Some(w) = boundary_weights else { continue };
                    let terms: Vec<(BetaPolynomial, DivisorClass)> = w
                        .iter()
                        .cloned()
                        .zip(pair.boundary().iter().cloned())
                        .collect();
                    let rebuilt = BetaDivisor::combination(pair.basis(), vars, &terms);
                    if rebuilt.as_ref() != Ok(d) {
                        continue;
                    }
                    let ineq = w
                        .iter()
                        .enumerate()
                        .map(|(j, wj)| (format!("weight on C{}", j + 1), wj.clone(), Requirement::Positive))
                        .collect();
                    out.push(Certificate {
                        kind: *kind,
                        family: "curves off the boundary of a del Pezzo surface with anticanonical boundary".into(),
                        bounding_class: None,
                        inequalities: ineq,
                    });
                }
                _ => {}
            }
        }
        out
    }
}
