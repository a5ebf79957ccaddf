use crate::lattice::{small_beta_sign, BetaDivisor, BetaPolynomial, SignMode, SmallBetaVerdict, Witness};
use crate::rational::Rational;
use crate::surface::{CertificateKind, Requirement, SurfacePair, TestCurveSet};
use num_traits::{Signed, Zero};
use serde::Serialize;

/// How a polynomial inequality is judged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Judge {
    /// For all small weights in the given sense.
    Small(SignMode),
    /// At one fixed weight vector.
    At(Vec<Rational>),
    /// At one weight vector, only asking for nefness (`>= 0`) off the square.
    NefAt(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// `D^2` or the label of the curve `Z` with `D.Z` failing.
    pub subject: String,
    pub class: Option<String>,
    pub polynomial: BetaPolynomial,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub subject: String,
    pub polynomial: BetaPolynomial,
    pub strong: SmallBetaVerdict,
    pub diagonal: SmallBetaVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct Assessment {
    pub verdict: SmallBetaVerdict,
    pub failure: Option<Failure>,
    pub checks: Vec<CheckOutcome>,
    /// The first generic bound that covered all remaining curves.
    pub covered_by: Option<CertificateKind>,
}

impl Judge {
    fn decide(&self, p: &BetaPolynomial, req: Requirement) -> (SmallBetaVerdict, Option<Witness>) {
        match self {
            Judge::Small(mode) => {
                let d = small_beta_sign(p, *mode);
                let v = match (req, d.verdict) {
                    (Requirement::NonNegative, SmallBetaVerdict::NonNegative) => SmallBetaVerdict::Positive,
                    (_, v) => v,
                };
                (v, d.witness)
            }
            Judge::At(point) => (point_verdict(p.eval(point), req), None),
            Judge::NefAt(point) => (point_verdict(p.eval(point), Requirement::NonNegative), None),
        }
    }
}

fn point_verdict(v: Rational, req: Requirement) -> SmallBetaVerdict {
    let ok = match req {
        Requirement::Positive => v.is_positive(),
        Requirement::NonNegative => !v.is_negative(),
    };
    if ok {
        SmallBetaVerdict::Positive
    } else if v.is_zero() {
        SmallBetaVerdict::NonNegative
    } else {
        SmallBetaVerdict::NotPositive
    }
}

/// Nakai-Moishezon test of `d`: positive square, positive on every explicit
/// curve, and some generic bound covering all other curves.
///
/// A check that is only nonnegative counts as a failure: ampleness is strict.
pub fn assess(
    pair: &SurfacePair,
    set: &TestCurveSet,
    d: &BetaDivisor,
    boundary_weights: Option<&[BetaPolynomial]>,
    judge: &Judge,
) -> Assessment {
    let mut checks = Vec::new();
    let mut failure: Option<Failure> = None;
    let mut unknown = false;
    let square_judge = match judge {
        Judge::NefAt(p) => Judge::At(p.clone()),
        other => other.clone(),
    };
    let square = d.square();
    let mut record = |subject: String,
                      class: Option<String>,
                      poly: BetaPolynomial,
                      judge: &Judge,
                      failure: &mut Option<Failure>| {
        let (v, witness) = judge.decide(&poly, Requirement::Positive);
        match v {
            SmallBetaVerdict::Positive => {}
            SmallBetaVerdict::Indeterminate => unknown = true,
            _ => {
                if failure.is_none() {
                    *failure = Some(Failure {
                        subject: subject.clone(),
                        class: class.clone(),
                        polynomial: poly.clone(),
                        witness,
                    });
                }
            }
        }
        checks.push(CheckOutcome {
            subject,
            polynomial: poly,
            strong: v,
            diagonal: v,
        });
    };
    record("D^2".into(), None, square, &square_judge, &mut failure);
    for curve in &set.explicit {
        let poly = d.intersect_class(&curve.class).expect("same lattice");
        record(
            curve.label.clone(),
            Some(curve.class.to_text()),
            poly,
            judge,
            &mut failure,
        );
    }
    let mut covered_by = None;
    for cert in set.certificates(pair, d, boundary_weights) {
        let passes = cert.inequalities.iter().all(|(_, p, req)| {
            let req = match judge {
                Judge::NefAt(_) => Requirement::NonNegative,
                _ => *req,
            };
            judge.decide(p, req).0 == SmallBetaVerdict::Positive
        });
        if passes {
            covered_by = Some(cert.kind);
            break;
        }
    }
    let verdict = if failure.is_some() {
        SmallBetaVerdict::NotPositive
    } else if unknown || covered_by.is_none() {
        SmallBetaVerdict::Indeterminate
    } else {
        SmallBetaVerdict::Positive
    };
    Assessment {
        verdict,
        failure,
        checks,
        covered_by,
    }
}
