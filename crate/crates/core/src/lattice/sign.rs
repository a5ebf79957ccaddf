//! Sign of a weight polynomial for all sufficiently small weights.

use super::BetaPolynomial;
use crate::rational::{int, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignMode {
    /// `p > 0` on a punctured neighbourhood of the origin in the open
    /// positive orthant (every weight small, independently).
    Orthant,
    /// `p(t, ..., t) > 0` for small `t > 0`.
    Diagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SmallBetaVerdict {
    Positive,
    /// Nonnegative near the origin but vanishing somewhere arbitrarily close to it.
    NonNegative,
    NotPositive,
    Indeterminate,
}

impl SmallBetaVerdict {
    pub fn is_positive(self) -> bool {
        self == SmallBetaVerdict::Positive
    }

    /// Passes a weak (`>= 0`) requirement.
    pub fn is_nonnegative(self) -> bool {
        matches!(self, SmallBetaVerdict::Positive | SmallBetaVerdict::NonNegative)
    }
}

/// A monomial curve `beta_i(t) = coeffs[i] * t^exponents[i]`, `t -> 0+`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPath {
    #[serde(with = "crate::rational::serde_vec")]
    pub coeffs: Vec<Rational>,
    pub exponents: Vec<u32>,
}

impl WitnessPath {
    pub fn diagonal(vars: usize) -> Self {
        WitnessPath {
            coeffs: vec![int(1); vars],
            exponents: vec![1; vars],
        }
    }

    pub fn point(&self, t: Rational) -> Vec<Rational> {
        self.coeffs
            .iter()
            .zip(&self.exponents)
            .map(|(c, &e)| c * pow(t, e))
            .collect()
    }

    /// `p` restricted to the path, as coefficients of `1, t, t^2, ...`.
    pub fn restrict(&self, p: &BetaPolynomial) -> Vec<Rational> {
        let top = 2 * self.exponents.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![Rational::zero(); top + 1];
        out[0] += p.constant_term();
        for i in 0..p.vars() {
            let c = p.linear_coeff(i);
            if !c.is_zero() {
                out[self.exponents[i] as usize] += c * self.coeffs[i];
            }
            for j in i..p.vars() {
                let q = p.quad_coeff(i, j);
                if !q.is_zero() {
                    let e = (self.exponents[i] + self.exponents[j]) as usize;
                    out[e] += q * self.coeffs[i] * self.coeffs[j];
                }
            }
        }
        out
    }
}

fn pow(t: Rational, e: u32) -> Rational {
    (0..e).fold(int(1), |acc, _| acc * t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub path: WitnessPath,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignDecision {
    pub verdict: SmallBetaVerdict,
    /// For `NotPositive`: a path along which `p <= 0`; for `NonNegative`:
    /// a path along which `p` vanishes identically or to high order.
    pub witness: Option<Witness>,
}

impl SignDecision {
    fn plain(verdict: SmallBetaVerdict) -> Self {
        SignDecision {
            verdict,
            witness: None,
        }
    }

    fn with(verdict: SmallBetaVerdict, path: WitnessPath, note: impl Into<String>) -> Self {
        SignDecision {
            verdict,
            witness: Some(Witness {
                path,
                note: note.into(),
            }),
        }
    }
}

/// Decides the sign of `p` for small weights.
///
/// Orthant mode is layered: the constant term decides if nonzero, then any
/// negative linear coefficient refutes, and when some weights have zero
/// linear coefficient the quadratic form restricted to them must be
/// copositive. Exactly decided up to two such weights; beyond that only
/// sign-pattern shortcuts are applied and the rest is `Indeterminate`.
pub fn small_beta_sign(p: &BetaPolynomial, mode: SignMode) -> SignDecision {
    match mode {
        SignMode::Diagonal => diagonal_sign(p),
        SignMode::Orthant => orthant_sign(p),
    }
}

fn diagonal_sign(p: &BetaPolynomial) -> SignDecision {
    let vars = p.vars();
    for c in p.diagonal() {
        if c.is_positive() {
            return SignDecision::plain(SmallBetaVerdict::Positive);
        }
        if c.is_negative() {
            return SignDecision::with(
                SmallBetaVerdict::NotPositive,
                WitnessPath::diagonal(vars),
                "negative along the diagonal",
            );
        }
    }
    SignDecision::with(
        SmallBetaVerdict::NonNegative,
        WitnessPath::diagonal(vars),
        "vanishes identically along the diagonal",
    )
}

/// Outcome of testing a quadratic form on the closed nonnegative orthant.
enum FormTest {
    /// Positive on the open orthant (and copositive).
    Strict,
    /// Copositive, with a zero at an interior direction.
    ZeroAt(Vec<Rational>),
    /// Negative at this nonnegative direction.
    NegativeAt(Vec<Rational>),
    Unknown,
}

fn orthant_sign(p: &BetaPolynomial) -> SignDecision {
    let vars = p.vars();
    let c0 = p.constant_term();
    if c0.is_positive() {
        return SignDecision::plain(SmallBetaVerdict::Positive);
    }
    if c0.is_negative() {
        return SignDecision::with(
            SmallBetaVerdict::NotPositive,
            WitnessPath::diagonal(vars),
            "negative constant term",
        );
    }
    if let Some(i) = (0..vars).find(|&i| p.linear_coeff(i).is_negative()) {
        let mut path = WitnessPath {
            coeffs: vec![int(1); vars],
            exponents: vec![2; vars],
        };
        path.exponents[i] = 1;
        return SignDecision::with(
            SmallBetaVerdict::NotPositive,
            path,
            format!("negative coefficient of weight {}", i + 1),
        );
    }
    let (lin, flat): (Vec<usize>, Vec<usize>) = (0..vars).partition(|&i| p.linear_coeff(i).is_positive());
    if flat.is_empty() {
        return SignDecision::plain(SmallBetaVerdict::Positive);
    }
    let form = Form::restrict(p, &flat);
    match form.test() {
        FormTest::Strict => SignDecision::plain(SmallBetaVerdict::Positive),
        FormTest::ZeroAt(w) => {
            if lin.is_empty() {
                // p is the form itself, so it vanishes on the ray t*w.
                SignDecision::with(
                    SmallBetaVerdict::NonNegative,
                    lift(vars, &flat, &w, &[]),
                    "quadratic part vanishes along this ray",
                )
            } else {
                // Linear terms dominate wherever the zero direction is left.
                SignDecision::plain(SmallBetaVerdict::Positive)
            }
        }
        FormTest::NegativeAt(w) => SignDecision::with(
            SmallBetaVerdict::NotPositive,
            lift(vars, &flat, &w, &lin),
            "quadratic part negative where the linear part vanishes",
        ),
        FormTest::Unknown => SignDecision::plain(SmallBetaVerdict::Indeterminate),
    }
}

/// Path `beta_flat = t*w` (zero entries pushed to `t^2`), `beta_lin = t^3`.
fn lift(vars: usize, flat: &[usize], w: &[Rational], lin: &[usize]) -> WitnessPath {
    let mut path = WitnessPath {
        coeffs: vec![int(1); vars],
        exponents: vec![3; vars],
    };
    for (k, &i) in flat.iter().enumerate() {
        if w[k].is_zero() {
            path.exponents[i] = 2;
        } else {
            path.coeffs[i] = w[k];
            path.exponents[i] = 1;
        }
    }
    for &i in lin {
        path.exponents[i] = 3;
    }
    path
}

/// Quadratic form `sum_{i<=j} q_ij x_i x_j` on a subset of the weights.
struct Form {
    q: Vec<Vec<Rational>>,
}

impl Form {
    fn restrict(p: &BetaPolynomial, idx: &[usize]) -> Self {
        let q = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| p.quad_coeff(i, j)).collect())
            .collect();
        Form { q }
    }

    fn dim(&self) -> usize {
        self.q.len()
    }

    fn axis(&self, i: usize) -> Vec<Rational> {
        let mut w = vec![Rational::zero(); self.dim()];
        w[i] = int(1);
        w
    }

    /// Decides the form `a x^2 + m x y + c y^2` on the quadrant spanned by axes `i`, `j`.
    fn test_pair(&self, i: usize, j: usize) -> FormTest {
        let (a, m, c) = (self.q[i][i], self.q[i][j], self.q[j][j]);
        if a.is_negative() {
            return FormTest::NegativeAt(self.axis(i));
        }
        if c.is_negative() {
            return FormTest::NegativeAt(self.axis(j));
        }
        let place = |x: Rational, y: Rational| {
            let mut w = vec![Rational::zero(); self.dim()];
            w[i] = x;
            w[j] = y;
            w
        };
        if !m.is_negative() {
            return if a.is_zero() && m.is_zero() && c.is_zero() {
                FormTest::ZeroAt(place(int(1), int(1)))
            } else {
                FormTest::Strict
            };
        }
        // m < 0: compare the halved cross term against the diagonal.
        let b = m / int(2);
        let disc = b * b - a * c;
        if disc.is_negative() {
            FormTest::Strict
        } else if disc.is_zero() {
            FormTest::ZeroAt(place(-b, a))
        } else if a.is_positive() {
            FormTest::NegativeAt(place(-b, a))
        } else if c.is_positive() {
            FormTest::NegativeAt(place(c, -b))
        } else {
            FormTest::NegativeAt(place(int(1), int(1)))
        }
    }

    fn test(&self) -> FormTest {
        let n = self.dim();
        match n {
            0 => return FormTest::ZeroAt(vec![]),
            1 => {
                let a = self.q[0][0];
                return if a.is_positive() {
                    FormTest::Strict
                } else if a.is_zero() {
                    FormTest::ZeroAt(vec![int(1)])
                } else {
                    FormTest::NegativeAt(vec![int(1)])
                };
            }
            2 => return self.test_pair(0, 1),
            _ => {}
        }
        for i in 0..n {
            if self.q[i][i].is_negative() {
                return FormTest::NegativeAt(self.axis(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if let FormTest::NegativeAt(w) = self.test_pair(i, j) {
                    return FormTest::NegativeAt(w);
                }
            }
        }
        let all_nonneg = (0..n).all(|i| (i..n).all(|j| !self.q[i][j].is_negative()));
        if all_nonneg {
            let any = (0..n).any(|i| (i..n).any(|j| !self.q[i][j].is_zero()));
            if any {
                FormTest::Strict
            } else {
                FormTest::ZeroAt(vec![int(1); n])
            }
        } else {
            FormTest::Unknown
        }
    }
}
