use crate::lattice::BetaPolynomial;
use crate::rational::{self, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A quotient of polynomials in one variable `beta`, coefficients listed
/// from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Vec<Rational>,
    den: Vec<Rational>,
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn poly_eval(p: &[Rational], x: Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub(crate) fn poly_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let at = |p: &[Rational], i: usize| p.get(i).copied().unwrap_or_else(Rational::zero);
    trim((0..n).map(|i| at(a, i) + at(b, i)).collect())
}

pub(crate) fn poly_scale(a: &[Rational], s: Rational) -> Vec<Rational> {
    trim(a.iter().map(|c| c * s).collect())
}

pub(crate) fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Sign of `p(beta)` for all small `beta > 0`: the lowest nonzero coefficient.
pub(crate) fn germ_sign(p: &[Rational]) -> Ordering {
    match p.iter().find(|c| !c.is_zero()) {
        None => Ordering::Equal,
        Some(c) if c.is_positive() => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

fn text(p: &[Rational]) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut linear = vec![Rational::zero(); 1];
    let mut quad = Vec::new();
    for (k, c) in p.iter().enumerate().skip(1) {
        match k {
            1 => linear[0] = *c,
            2 => quad.push(((0, 0), *c)),
            _ => return higher_text(p),
        }
    }
    BetaPolynomial::from_parts(p[0], linear, &quad).to_text()
}

fn higher_text(p: &[Rational]) -> String {
    let mut parts = Vec::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = rational::Short(c).to_string();
        parts.push(match k {
            0 => c,
            1 => format!("{c}*b"),
            _ => format!("{c}*b^{k}"),
        });
    }
    parts.join(" + ")
}

impl RationalFunction {
    pub fn new(num: Vec<Rational>, den: Vec<Rational>) -> Option<Self> {
        let (num, den) = (trim(num), trim(den));
        if den.is_empty() {
            return None;
        }
        // Clear denominators, remove the content, and make the lowest
        // denominator coefficient positive.
        let all = || num.iter().chain(den.iter()).filter(|c| !c.is_zero());
        let lcm = all().fold(1i128, |acc, c| acc.lcm(c.denom()));
        let gcd = all().fold(0i128, |acc, c| acc.gcd(&(c * lcm).to_integer()));
        let lowest = *den.iter().find(|c| !c.is_zero()).expect("nonzero");
        let s = Rational::new(lcm, gcd) * if lowest.is_negative() { -Rational::one() } else { Rational::one() };
        let mut f = RationalFunction {
            num: poly_scale(&num, s),
            den: poly_scale(&den, s),
        };
        if !f.num.is_empty() && f.num.len() == f.den.len() {
            let k = f.num[f.num.len() - 1] / f.den[f.den.len() - 1];
            if f.num.iter().zip(&f.den).all(|(a, b)| *a == b * k) {
                f = RationalFunction::constant(k);
            }
        }
        if f.den.len() == 1 {
            let d = f.den[0];
            f = RationalFunction {
                num: poly_scale(&f.num, d.recip()),
                den: vec![Rational::one()],
            };
        }
        Some(f)
    }

    pub fn constant(q: Rational) -> Self {
        RationalFunction {
            num: trim(vec![q]),
            den: vec![Rational::one()],
        }
    }

    /// `beta`.
    pub fn beta() -> Self {
        RationalFunction {
            num: vec![Rational::zero(), Rational::one()],
            den: vec![Rational::one()],
        }
    }

    /// From one-variable polynomials.
    pub fn from_polys(num: &BetaPolynomial, den: &BetaPolynomial) -> Option<Self> {
        if num.vars() != 1 || den.vars() != 1 {
            return None;
        }
        Self::new(num.diagonal().to_vec(), den.diagonal().to_vec())
    }

    pub fn numerator(&self) -> &[Rational] {
        &self.num
    }

    pub fn denominator(&self) -> &[Rational] {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.len(), self.den.as_slice()) {
            (0, _) => Some(Rational::zero()),
            (1, [d]) => Some(self.num[0] / d),
            _ => None,
        }
    }

    pub fn eval(&self, beta: Rational) -> Option<Rational> {
        let d = poly_eval(&self.den, beta);
        (!d.is_zero()).then(|| poly_eval(&self.num, beta) / d)
    }

    /// Value of the germ at `beta -> 0+`, if finite.
    pub fn limit_at_zero(&self) -> Option<Rational> {
        let lowest = |p: &[Rational]| p.iter().position(|c| !c.is_zero());
        match (lowest(&self.num), lowest(&self.den)) {
            (None, _) => Some(Rational::zero()),
            (Some(a), Some(b)) if a > b => Some(Rational::zero()),
            (Some(a), Some(b)) if a == b => Some(self.num[a] / self.den[b]),
            _ => None,
        }
    }

    /// Compares two functions for all small `beta > 0`, assuming both
    /// denominators are positive there.
    pub fn cmp_small_beta(&self, other: &Self) -> Ordering {
        let lhs = poly_mul(&self.num, &other.den);
        let rhs = poly_mul(&other.num, &self.den);
        germ_sign(&poly_add(&lhs, &poly_scale(&rhs, -Rational::one())))
    }

    /// Whether the denominator is positive for small `beta > 0`.
    pub fn denominator_positive(&self) -> bool {
        germ_sign(&self.den) == Ordering::Greater
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.len() == 1 && self.den[0].is_one() {
            return f.write_str(&text(&self.num));
        }
        let wrap = |p: &[Rational]| {
            let t = text(p);
            if p.iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({t})")
            } else {
                t
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs = |p: &[Rational]| p.iter().map(rational::format).collect::<Vec<_>>();
        let mut st = s.serialize_struct("RationalFunction", 3)?;
        st.serialize_field("num", &strs(&self.num))?;
        st.serialize_field("den", &strs(&self.den))?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn normalizes_and_prints() {
        let f = RationalFunction::new(vec![int(2), int(2)], vec![int(4), int(2)]).unwrap();
        assert_eq!(f.to_string(), "(1 + b)/(2 + b)");
        assert_eq!(f.eval(int(1)), Some(frac(2, 3)));
        assert_eq!(f.limit_at_zero(), Some(frac(1, 2)));
        let g = RationalFunction::new(vec![int(0), int(3)], vec![int(0), int(3)]).unwrap();
        assert_eq!(g.as_constant(), Some(int(1)));
    }

    #[test]
    fn small_beta_comparison() {
        let f = RationalFunction::new(vec![int(1), int(1)], vec![int(2), int(1)]).unwrap();
        assert_eq!(f.cmp_small_beta(&RationalFunction::constant(int(1))), Ordering::Less);
        assert_eq!(f.cmp_small_beta(&RationalFunction::constant(frac(1, 2))), Ordering::Greater);
    }
}
