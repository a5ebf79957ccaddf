//! Log canonical thresholds of simple curve germs and closed-form values and
//! bounds for alpha invariants of pairs `(S, (1 - beta) C)`.

mod alpha;
mod function;
mod lct;

pub use alpha::{
    adjunction_nef_counterexample, alpha_beth_bounds, alpha_limit, alpha_lower_bound, alpha_on_curve,
    alpha_toric_three_lines, alpha_upper_bound_big, anticanonical_lower_bound, berman_lower_bound,
    kee_weight_threshold, remark_bound, remark_constant, BethBounds, RemarkReading,
};
pub use function::RationalFunction;
pub use lct::{lct_local, lct_local_at, Branch, GermShape, LocalConfig};

use crate::rational::{self, Rational};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThresholdError {
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("not log canonical: {0}")]
    NotLogCanonical(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AlphaKind {
    Exact,
    LowerBound,
    UpperBound,
    Limit,
}

/// An exact number or a rational function of `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum AlphaExpr {
    Number(#[serde(with = "rational::serde_str")] Rational),
    Function(RationalFunction),
}

impl AlphaExpr {
    /// Value at `beta`, `None` where a denominator vanishes.
    pub fn at(&self, beta: Rational) -> Option<Rational> {
        match self {
            AlphaExpr::Number(q) => Some(*q),
            AlphaExpr::Function(f) => f.eval(beta),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AlphaExpr::Number(q) => rational::format(q),
            AlphaExpr::Function(f) => f.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaValue {
    pub value: AlphaExpr,
    pub kind: AlphaKind,
    /// The rule that produced the value.
    pub rule: String,
}

impl AlphaValue {
    pub fn number(q: Rational, kind: AlphaKind, rule: impl Into<String>) -> Self {
        AlphaValue {
            value: AlphaExpr::Number(q),
            kind,
            rule: rule.into(),
        }
    }

    pub fn function(f: RationalFunction, kind: AlphaKind, rule: impl Into<String>) -> Self {
        let value = match f.as_constant() {
            Some(q) => AlphaExpr::Number(q),
            None => AlphaExpr::Function(f),
        };
        AlphaValue {
            value,
            kind,
            rule: rule.into(),
        }
    }

    /// The value when it is a plain number.
    pub fn as_number(&self) -> Option<Rational> {
        match self.value {
            AlphaExpr::Number(q) => Some(q),
            AlphaExpr::Function(_) => None,
        }
    }
}
