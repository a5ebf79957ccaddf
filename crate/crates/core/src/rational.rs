//! Rational numbers and their canonical `"p/q"` text form.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};
use std::fmt;

/// Exact rational scalar used throughout the lattice code.
///
/// Coefficients arising from Picard lattices of the supported surfaces are
/// tiny, so a machine-word numerator is ample; the few constants that are
/// astronomically large live in [`crate::thresholds`] as big rationals.
pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational `{0}`")]
pub struct ParseRationalError(pub String);

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

/// Canonical text form: always `p/q` in lowest terms with `q > 0`.
pub fn format(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q`, `p`, or a JSON-style integer string.
pub fn parse(text: &str) -> Result<Rational, ParseRationalError> {
    let bad = || ParseRationalError(text.to_string());
    let t = text.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.trim().parse().map_err(|_| bad())?;
            let q: i128 = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => t.parse::<i128>().map(int).map_err(|_| bad()),
    }
}

/// Display adapter printing integers without a denominator, for tables.
pub struct Short<'a>(pub &'a Rational);

impl fmt::Display for Short<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

pub fn gcd_normalize(values: &mut [Rational]) {
    // Scale a nonzero vector to coprime integers with the first nonzero entry positive.
    let lcm = values.iter().fold(1i128, |acc, v| acc.lcm(v.denom()));
    let mut g = 0i128;
    for v in values.iter_mut() {
        *v *= int(lcm);
        g = g.gcd(v.numer());
    }
    if g > 1 {
        for v in values.iter_mut() {
            *v /= int(g);
        }
    }
    if let Some(first) = values.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in values.iter_mut() {
                *v = -*v;
            }
        }
    }
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub mod serde_str {
    //! Serde adapter writing a [`Rational`] as a `"p/q"` string.
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        from_json(&v).map_err(serde::de::Error::custom)
    }
}

pub mod serde_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<serde_json::Value>::deserialize(d)?;
        v.iter()
            .map(|x| from_json(x).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Accepts a rational string or a JSON integer.
pub fn from_json(v: &serde_json::Value) -> Result<Rational, ParseRationalError> {
    match v {
        serde_json::Value::String(s) => parse(s),
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|i| int(i as i128))
            .ok_or_else(|| ParseRationalError(n.to_string())),
        other => Err(ParseRationalError(other.to_string())),
    }
}
