use super::LatticeError;
use crate::rational::{format, int, Rational, Short};
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial of total degree at most 2 in the boundary weights
/// `beta_1, ..., beta_r`, with exact rational coefficients.
///
/// Stored densely: constant term, linear coefficients and the upper
/// triangle of the quadratic part (`quad[(i, j)]` is the coefficient of
/// `beta_i * beta_j` for `i <= j`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaPolynomial {
    vars: usize,
    constant: Rational,
    linear: Vec<Rational>,
    quad: Vec<Rational>,
}

fn tri(vars: usize) -> usize {
    vars * (vars + 1) / 2
}

fn tri_index(vars: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * vars - i * (i + 1) / 2 + j
}

impl BetaPolynomial {
    pub fn zero(vars: usize) -> Self {
        BetaPolynomial {
            vars,
            constant: Rational::zero(),
            linear: vec![Rational::zero(); vars],
            quad: vec![Rational::zero(); tri(vars)],
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.constant = c;
        p
    }

    pub fn integer(vars: usize, c: i128) -> Self {
        Self::constant(vars, int(c))
    }

    /// The weight `beta_i` (0-based index).
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index {i} out of range for {vars} variables");
        let mut p = Self::zero(vars);
        p.linear[i] = int(1);
        p
    }

    /// Builds a polynomial from explicit coefficients.
    pub fn from_parts(
        constant: Rational,
        linear: Vec<Rational>,
        quad_terms: &[((usize, usize), Rational)],
    ) -> Self {
        let vars = linear.len();
        let mut p = Self::zero(vars);
        p.constant = constant;
        p.linear = linear;
        for &((i, j), c) in quad_terms {
            p.quad[tri_index(vars, i, j)] += c;
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn constant_term(&self) -> Rational {
        self.constant
    }

    pub fn linear_coeff(&self, i: usize) -> Rational {
        self.linear[i]
    }

    pub fn linear_coeffs(&self) -> &[Rational] {
        &self.linear
    }

    /// Coefficient of the monomial `beta_i * beta_j` (so `beta_i^2` when `i == j`).
    pub fn quad_coeff(&self, i: usize, j: usize) -> Rational {
        self.quad[tri_index(self.vars, i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.quad.iter().any(|c| !c.is_zero()) {
            Some(2)
        } else if self.linear.iter().any(|c| !c.is_zero()) {
            Some(1)
        } else if !self.constant.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars, "evaluation point has wrong length");
        let mut acc = self.constant;
        for (c, x) in self.linear.iter().zip(point) {
            acc += c * x;
        }
        for i in 0..self.vars {
            for j in i..self.vars {
                let c = self.quad[tri_index(self.vars, i, j)];
                if !c.is_zero() {
                    acc += c * point[i] * point[j];
                }
            }
        }
        acc
    }

    /// Restriction to the diagonal `beta_j = t`, as `[c0, c1, c2]` in `t`.
    pub fn diagonal(&self) -> [Rational; 3] {
        let c1 = self.linear.iter().fold(Rational::zero(), |a, c| a + c);
        let c2 = self.quad.iter().fold(Rational::zero(), |a, c| a + c);
        [self.constant, c1, c2]
    }

    /// Substitutes the same value for every variable and evaluates.
    pub fn eval_uniform(&self, t: Rational) -> Rational {
        let [c0, c1, c2] = self.diagonal();
        c0 + c1 * t + c2 * t * t
    }

    pub fn scale(&self, s: Rational) -> Self {
        BetaPolynomial {
            vars: self.vars,
            constant: self.constant * s,
            linear: self.linear.iter().map(|c| c * s).collect(),
            quad: self.quad.iter().map(|c| c * s).collect(),
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), LatticeError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(LatticeError::VariableMismatch {
                left: self.vars,
                right: other.vars,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LatticeError> {
        self.check_vars(other)?;
        Ok(BetaPolynomial {
            vars: self.vars,
            constant: self.constant + other.constant,
            linear: zip_with(&self.linear, &other.linear, |a, b| a + b),
            quad: zip_with(&self.quad, &other.quad, |a, b| a + b),
        })
    }

    /// Exact product; fails if the result would have degree above 2.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, LatticeError> {
        self.check_vars(other)?;
        let da = self.degree().unwrap_or(0);
        let db = other.degree().unwrap_or(0);
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.vars));
        }
        if da + db > 2 {
            return Err(LatticeError::DegreeOverflow);
        }
        let n = self.vars;
        let mut out = Self::zero(n);
        out.constant = self.constant * other.constant;
        for i in 0..n {
            out.linear[i] = self.constant * other.linear[i] + other.constant * self.linear[i];
        }
        for i in 0..n {
            for j in 0..n {
                let c = self.linear[i] * other.linear[j];
                if !c.is_zero() {
                    out.quad[tri_index(n, i, j)] += c;
                }
            }
        }
        if da == 2 {
            for (o, q) in out.quad.iter_mut().zip(&self.quad) {
                *o += q * other.constant;
            }
        }
        if db == 2 {
            for (o, q) in out.quad.iter_mut().zip(&other.quad) {
                *o += q * self.constant;
            }
        }
        Ok(out)
    }

    /// Nonzero monomials as `(exponent vector, coefficient)` in graded order.
    pub fn terms(&self) -> Vec<(Vec<u32>, Rational)> {
        let n = self.vars;
        let mut out = Vec::new();
        if !self.constant.is_zero() {
            out.push((vec![0; n], self.constant));
        }
        for (i, c) in self.linear.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                out.push((e, *c));
            }
        }
        for i in 0..n {
            for j in i..n {
                let c = self.quad[tri_index(n, i, j)];
                if !c.is_zero() {
                    let mut e = vec![0; n];
                    e[i] += 1;
                    e[j] += 1;
                    out.push((e, c));
                }
            }
        }
        out
    }

    /// Lowercase text form such as `4*b + b^2` or `b1 + b2 - 2*b3`.
    pub fn to_text(&self) -> String {
        let name = |i: usize| {
            if self.vars == 1 {
                "b".to_string()
            } else {
                format!("b{}", i + 1)
            }
        };
        let mut s = String::new();
        for (exps, c) in self.terms() {
            let mut mono: Vec<String> = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push(name(i)),
                    _ => mono.push(format!("{}^{}", name(i), e)),
                }
            }
            let mag = c.abs();
            let body = if mono.is_empty() {
                format!("{}", Short(&mag))
            } else if mag == int(1) {
                mono.join("*")
            } else {
                format!("{}*{}", Short(&mag), mono.join("*"))
            };
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
                s.push_str(&body);
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
                s.push_str(&body);
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

fn zip_with(a: &[Rational], b: &[Rational], f: impl Fn(Rational, Rational) -> Rational) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| f(*x, *y)).collect()
}

impl fmt::Display for BetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for BetaPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            exponents: Vec<u32>,
            coefficient: String,
        }
        #[derive(Serialize)]
        struct Repr {
            text: String,
            terms: Vec<Term>,
            vars: usize,
        }
        Repr {
            text: self.to_text(),
            terms: self
                .terms()
                .into_iter()
                .map(|(exponents, c)| Term {
                    exponents,
                    coefficient: format(&c),
                })
                .collect(),
            vars: self.vars,
        }
        .serialize(s)
    }
}

impl Add for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        self.checked_add(rhs).expect("weight variable count mismatch")
    }
}

impl Add for BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(self, rhs: BetaPolynomial) -> BetaPolynomial {
        &self + &rhs
    }
}

impl Neg for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        self.scale(int(-1))
    }
}

impl Neg for BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        -&self
    }
}

impl Sub for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn sub(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        self + &(-rhs)
    }
}

impl Sub for BetaPolynomial {
    type Output = BetaPolynomial;
    fn sub(self, rhs: BetaPolynomial) -> BetaPolynomial {
        &self - &rhs
    }
}

impl Mul<Rational> for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: Rational) -> BetaPolynomial {
        self.scale(rhs)
    }
}

impl Mul<Rational> for BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: Rational) -> BetaPolynomial {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn b(i: usize) -> BetaPolynomial {
        BetaPolynomial::var(2, i)
    }

    #[test]
    fn product_of_linear_forms() {
        let one = BetaPolynomial::integer(2, 1);
        let p = (&one + &b(0)).checked_mul(&(&b(0) - &b(1))).unwrap();
        assert_eq!(p.linear_coeff(0), int(1));
        assert_eq!(p.linear_coeff(1), int(-1));
        assert_eq!(p.quad_coeff(0, 0), int(1));
        assert_eq!(p.quad_coeff(1, 0), int(-1));
        assert_eq!(p.eval(&[frac(1, 2), frac(1, 3)]), frac(3, 2) * frac(1, 6));
    }

    #[test]
    fn degree_overflow_is_rejected() {
        let q = b(0).checked_mul(&b(1)).unwrap();
        assert_eq!(q.checked_mul(&b(0)), Err(LatticeError::DegreeOverflow));
        assert!(q.checked_mul(&BetaPolynomial::integer(2, 3)).is_ok());
    }

    #[test]
    fn text_form() {
        let p = BetaPolynomial::from_parts(int(0), vec![int(4)], &[((0, 0), int(1))]);
        assert_eq!(p.to_text(), "4*b + b^2");
        let q = &(&b(0) + &b(1)) - &(b(1) * int(3));
        assert_eq!(q.to_text(), "b1 - 2*b2");
        assert_eq!(BetaPolynomial::zero(3).to_text(), "0");
    }
}
