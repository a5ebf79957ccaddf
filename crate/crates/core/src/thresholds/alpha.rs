use super::function::RationalFunction;
use super::{AlphaKind, AlphaValue, ThresholdError};
use crate::classify::PositivityClass;
use crate::rational::{frac, int, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

fn require(ok: bool, what: &str) -> Result<(), ThresholdError> {
    if ok {
        Ok(())
    } else {
        Err(ThresholdError::InvalidArgument(what.into()))
    }
}

fn unit_open(beta: Rational) -> bool {
    beta.is_positive() && beta < int(1)
}

fn unit_half_open(beta: Rational) -> bool {
    beta.is_positive() && beta <= int(1)
}

/// `(1 - max a_i) / d` for points `P_i` with weights `a_i` on a curve
/// with a polarization of degree `d`; exact on `P^1`.
pub fn alpha_on_curve(point_coeffs: &[Rational], degree: Rational, rational_curve: bool) -> Result<AlphaValue, ThresholdError> {
    require(degree.is_positive(), "degree must be positive")?;
    if let Some(a) = point_coeffs.iter().find(|a| a.is_negative() || **a >= int(1)) {
        return Err(ThresholdError::NotLogCanonical(format!("point weight {a} is not in [0, 1)")));
    }
    let top = point_coeffs.iter().copied().max().unwrap_or_else(Rational::zero);
    let kind = if rational_curve { AlphaKind::Exact } else { AlphaKind::LowerBound };
    Ok(AlphaValue::number((int(1) - top) / degree, kind, "(1 - max a_i)/d"))
}

/// `min(beta/gamma, alpha(X), alpha(S))` for a divisor `S` with `H - gamma S`
/// pseudoeffective.
pub fn alpha_lower_bound(beta: Rational, gamma: Rational, alpha_x: Rational, alpha_s: Rational) -> Result<AlphaValue, ThresholdError> {
    require(gamma.is_positive(), "gamma must be positive")?;
    require(unit_open(beta), "beta must lie in (0, 1)")?;
    let v = (beta / gamma).min(alpha_x).min(alpha_s);
    Ok(AlphaValue::number(v, AlphaKind::LowerBound, "min(beta/gamma, alpha_X, alpha_S)"))
}

/// `min{1, alpha(X)/beta, alpha(S)/beta}` for a smooth ample boundary polarized by itself.
pub fn berman_lower_bound(beta: Rational, alpha_x: Rational, alpha_s: Rational) -> Result<AlphaValue, ThresholdError> {
    require(unit_half_open(beta), "beta must lie in (0, 1]")?;
    let v = int(1).min(alpha_x / beta).min(alpha_s / beta);
    Ok(AlphaValue::number(v, AlphaKind::LowerBound, "min{1, alpha_X/beta, alpha_S/beta}"))
}

fn anticanonical_constant(dim: u32) -> Result<Rational, ThresholdError> {
    match dim {
        2 => Ok(int(9)),
        3 => Ok(int(64)),
        _ => Err(ThresholdError::InvalidArgument("dimension must be 2 or 3".into())),
    }
}

/// `min{1, 1/(9 beta)}` on a del Pezzo surface, `min{1, 1/(64 beta)}` on a
/// Fano threefold, with a smooth anticanonical boundary.
pub fn anticanonical_lower_bound(dim: u32, beta: Rational) -> Result<AlphaValue, ThresholdError> {
    let n = anticanonical_constant(dim)?;
    require(unit_half_open(beta), "beta must lie in (0, 1]")?;
    Ok(AlphaValue::number(
        int(1).min((n * beta).recip()),
        AlphaKind::LowerBound,
        format!("min{{1, 1/({n} beta)}}"),
    ))
}

/// Weight below which the anticanonical bound exceeds `dim/(dim + 1)`.
pub fn kee_weight_threshold(dim: u32) -> Result<Rational, ThresholdError> {
    let n = anticanonical_constant(dim)?;
    let d = int(dim as i128);
    Ok((d + int(1)) / (d * n))
}

/// Limit of `alpha(S, (1 - beta) C)` as `beta -> 0+` for an irreducible boundary.
pub fn alpha_limit(class: PositivityClass) -> AlphaValue {
    let v = match class {
        PositivityClass::Aleph => int(1),
        PositivityClass::Beth => frac(1, 2),
        PositivityClass::Gimel | PositivityClass::Daleth => int(0),
    };
    AlphaValue::number(v, AlphaKind::Limit, format!("limit for class {class}"))
}

/// `beta / (epsilon + beta)` when `-N(K_S + C) ~ C + Delta` with `epsilon = 1/N`.
pub fn alpha_upper_bound_big(epsilon: Rational, beta: Rational) -> Result<AlphaValue, ThresholdError> {
    require(epsilon.is_positive(), "epsilon must be positive")?;
    require(beta.is_positive(), "beta must be positive")?;
    Ok(AlphaValue::number(beta / (epsilon + beta), AlphaKind::UpperBound, "beta/(epsilon + beta)"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BethBounds {
    /// Upper bound as a function of `beta`.
    pub upper: AlphaValue,
    /// Upper bound at the requested `beta`.
    #[serde(with = "crate::rational::serde_str")]
    pub upper_at_beta: Rational,
    /// `1/2 - epsilon`, certified for `beta < delta`.
    #[serde(with = "crate::rational::serde_str")]
    pub lower: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub delta: Rational,
}

/// Bounds for a `Beth` pair with smooth irreducible boundary of square `c_squared`.
///
/// The upper bound comes from the fiber through a point of the boundary:
/// `(1+beta)/(2+beta)` when that fiber is singular, `(1+2beta)/(2+2beta)` when it is
/// smooth and tangent to the boundary. A zero `c_squared` puts no constraint on `delta`.
pub fn alpha_beth_bounds(
    c_squared: i128,
    beta: Rational,
    fiber_singular: bool,
    epsilon: Rational,
    beta_max: Rational,
) -> Result<BethBounds, ThresholdError> {
    require(unit_half_open(beta), "beta must lie in (0, 1]")?;
    require(epsilon.is_positive() && epsilon < frac(1, 2), "epsilon must lie in (0, 1/2)")?;
    require(beta_max.is_positive(), "beta_max must be positive")?;
    let (num, den, rule) = if fiber_singular {
        (vec![int(1), int(1)], vec![int(2), int(1)], "singular fiber: (1+beta)/(2+beta)")
    } else {
        (vec![int(1), int(2)], vec![int(2), int(2)], "smooth fiber: (1+2beta)/(2+2beta)")
    };
    let f = RationalFunction::new(num, den).expect("nonzero");
    let upper_at_beta = f.eval(beta).expect("positive denominator");
    let mut delta = frac(1, 2).min(beta_max);
    if c_squared != 0 {
        delta = delta.min(epsilon / int(c_squared.abs()));
    }
    Ok(BethBounds {
        upper: AlphaValue::function(f, AlphaKind::UpperBound, rule),
        upper_at_beta,
        lower: frac(1, 2) - epsilon,
        delta,
    })
}

/// `max(beta_i) / sum(beta_i)` for three general lines in `P^2`.
pub fn alpha_toric_three_lines(betas: [Rational; 3]) -> Result<AlphaValue, ThresholdError> {
    require(betas.iter().all(|b| unit_half_open(*b)), "each beta must lie in (0, 1]")?;
    let max = betas.iter().copied().max().expect("three");
    let sum: Rational = betas.iter().sum();
    Ok(AlphaValue::number(max / sum, AlphaKind::Exact, "max(beta_i)/sum(beta_i)"))
}

/// Whether `(1+beta)/(2+beta) < 1/(2-beta)`: the bound from a non-nef
/// boundary would exceed the true value.
pub fn adjunction_nef_counterexample(beta: Rational) -> Result<bool, ThresholdError> {
    require(unit_open(beta), "beta must lie in (0, 1)")?;
    Ok((int(1) + beta) / (int(2) + beta) < (int(2) - beta).recip())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RemarkReading {
    /// `min{1, N^(n-1) M / beta}` as printed; never below 1.
    Literal,
    /// `min{1, 1 / (beta N^(n-1) M)}`.
    Corrected,
}

/// `M = 3^n (2^n - 1)^n (n+1)^(n (n+2) (2^n - 1))`.
pub fn remark_constant(n: u32) -> BigInt {
    let two_n = BigInt::from(2u32).pow(n) - BigInt::one();
    let exp = (n as u64) * (n as u64 + 2) * ((1u64 << n) - 1);
    let exp = u32::try_from(exp).expect("exponent fits");
    BigInt::from(3u32).pow(n) * two_n.pow(n) * BigInt::from(n + 1).pow(exp)
}

/// Lower bound for `alpha(X, (1 - beta) D)` on an `n`-fold with
/// `-K_X ~ N D`, in either reading.
pub fn remark_bound(n: u32, big_n: u32, beta: Rational, reading: RemarkReading) -> Result<BigRational, ThresholdError> {
    require((1..=4).contains(&n), "n must lie in 1..=4")?;
    require(big_n >= 1, "N must be positive")?;
    require(unit_half_open(beta), "beta must lie in (0, 1]")?;
    let scale = BigInt::from(big_n).pow(n - 1) * remark_constant(n);
    let b = BigRational::new(BigInt::from(*beta.numer()), BigInt::from(*beta.denom()));
    let value = match reading {
        RemarkReading::Literal => BigRational::from_integer(scale) / b,
        RemarkReading::Corrected => (b * BigRational::from_integer(scale)).recip(),
    };
    Ok(value.min(BigRational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_and_dimension_bounds() {
        assert_eq!(alpha_on_curve(&[frac(1, 2)], int(2), true).unwrap().as_number(), Some(frac(1, 4)));
        assert_eq!(alpha_on_curve(&[], int(9), false).unwrap().as_number(), Some(frac(1, 9)));
        assert!(alpha_on_curve(&[int(1)], int(1), true).is_err());
        assert_eq!(kee_weight_threshold(2).unwrap(), frac(1, 6));
        assert_eq!(kee_weight_threshold(3).unwrap(), frac(1, 48));
    }

    #[test]
    fn beth_delta() {
        let b = alpha_beth_bounds(-5, int(1), true, frac(1, 10), frac(1, 4)).unwrap();
        assert_eq!(b.delta, frac(1, 50));
        assert_eq!(b.upper_at_beta, frac(2, 3));
        let z = alpha_beth_bounds(0, int(1), false, frac(1, 10), frac(1, 4)).unwrap();
        assert_eq!(z.delta, frac(1, 4));
        assert_eq!(z.upper_at_beta, frac(3, 4));
    }

    #[test]
    fn remark_readings() {
        assert_eq!(remark_constant(1), BigInt::from(3 * 8));
        let lit = remark_bound(2, 1, frac(1, 2), RemarkReading::Literal).unwrap();
        assert!(lit.is_one());
        let cor = remark_bound(3, 2, frac(1, 2), RemarkReading::Corrected).unwrap();
        assert!(cor < BigRational::one() && cor.is_positive());
    }
}
