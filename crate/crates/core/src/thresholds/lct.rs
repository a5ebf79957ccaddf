use super::function::{germ_sign, poly_add, poly_eval, poly_scale, RationalFunction};
use super::{AlphaKind, AlphaValue, ThresholdError};
use crate::rational::{self, int, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// A smooth branch through the point with coefficient `fixed + lambda * weight`
/// when scaled, `fixed` otherwise. Both are polynomials in `beta`, constant
/// term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub label: String,
    #[serde(with = "rational::serde_vec")]
    pub fixed: Vec<Rational>,
    #[serde(with = "rational::serde_vec")]
    pub weight: Vec<Rational>,
}

impl Branch {
    /// Coefficient `lambda * w`.
    pub fn scaled(label: &str, w: Rational) -> Self {
        Branch {
            label: label.into(),
            fixed: vec![],
            weight: vec![w],
        }
    }

    /// Coefficient `(1 - beta) + lambda * beta`, a boundary curve with cone angle `2 pi beta`.
    pub fn boundary(label: &str) -> Self {
        Branch {
            label: label.into(),
            fixed: vec![int(1), int(-1)],
            weight: vec![int(0), int(1)],
        }
    }
}

/// Smooth branches through one point with pairwise contact orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalConfig {
    pub branches: Vec<Branch>,
    /// Symmetric; `1` is transverse, `t >= 2` a tangency of order `t`.
    /// The diagonal is ignored. Empty means all transverse.
    #[serde(default)]
    pub contact: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GermShape {
    /// `k` pairwise transverse branches.
    Ordinary { k: usize },
    /// Two branches with contact order `t >= 2`.
    Tangent { t: u32 },
}

/// `(slack, weight, name)`: the constraint `lambda * weight <= slack`.
type Constraint = (Vec<Rational>, Vec<Rational>, String);

impl LocalConfig {
    pub fn transverse(branches: Vec<Branch>) -> Self {
        LocalConfig {
            branches,
            contact: vec![],
        }
    }

    pub fn tangent(a: Branch, b: Branch, t: u32) -> Self {
        LocalConfig {
            branches: vec![a, b],
            contact: vec![vec![0, t], vec![t, 0]],
        }
    }

    pub fn shape(&self) -> Result<GermShape, ThresholdError> {
        let k = self.branches.len();
        if k == 0 {
            return Err(ThresholdError::InvalidArgument("no branches".into()));
        }
        for b in &self.branches {
            if b.fixed.len() > 2 || b.weight.len() > 2 {
                return Err(ThresholdError::InvalidArgument(format!(
                    "coefficient of {} has degree above 1 in beta",
                    b.label
                )));
            }
        }
        if self.contact.is_empty() {
            return Ok(GermShape::Ordinary { k });
        }
        if self.contact.len() != k || self.contact.iter().any(|row| row.len() != k) {
            return Err(ThresholdError::InvalidArgument("contact matrix size".into()));
        }
        let mut tangencies = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (self.contact[i][j], self.contact[j][i]);
                if a != b || a == 0 {
                    return Err(ThresholdError::InvalidArgument(format!(
                        "contact orders at ({i},{j}) must be equal and positive"
                    )));
                }
                if a >= 2 {
                    tangencies.push(a);
                }
            }
        }
        match (k, tangencies.as_slice()) {
            (_, []) => Ok(GermShape::Ordinary { k }),
            (2, [t]) => Ok(GermShape::Tangent { t: *t }),
            _ => Err(ThresholdError::Unsupported(
                "tangencies are supported only between exactly two branches".into(),
            )),
        }
    }

    /// `(slack, weight, name)`: each constraint reads `lambda * weight <= slack`.
    fn constraints(&self, scaled: &BTreeSet<usize>) -> Result<Vec<Constraint>, ThresholdError> {
        let shape = self.shape()?;
        if let Some(&i) = scaled.iter().find(|&&i| i >= self.branches.len()) {
            return Err(ThresholdError::InvalidArgument(format!("no branch {i}")));
        }
        let weight = |i: usize| -> Vec<Rational> {
            if scaled.contains(&i) {
                self.branches[i].weight.clone()
            } else {
                vec![]
            }
        };
        let minus = |p: &[Rational]| poly_scale(p, -Rational::one());
        let mut out = Vec::new();
        for (i, b) in self.branches.iter().enumerate() {
            out.push((poly_add(&[int(1)], &minus(&b.fixed)), weight(i), format!("{} <= 1", b.label)));
        }
        let total_fixed = self.branches.iter().fold(vec![], |acc, b| poly_add(&acc, &b.fixed));
        let total_weight = (0..self.branches.len()).fold(vec![], |acc, i| poly_add(&acc, &weight(i)));
        match shape {
            GermShape::Ordinary { k } if k >= 2 => {
                out.push((poly_add(&[int(2)], &minus(&total_fixed)), total_weight, "sum <= 2".into()));
            }
            GermShape::Ordinary { .. } => {}
            GermShape::Tangent { t } => {
                let bound = int(1) + Rational::new(1, t as i128);
                out.push((
                    poly_add(&[bound], &minus(&total_fixed)),
                    total_weight,
                    format!("sum <= 1 + 1/{t}"),
                ));
            }
        }
        Ok(out)
    }
}

/// Largest `lambda`, as a function of small `beta > 0`, keeping the germ log
/// canonical when the selected branches are scaled.
pub fn lct_local(cfg: &LocalConfig, scaled: &BTreeSet<usize>) -> Result<AlphaValue, ThresholdError> {
    let mut best: Option<(RationalFunction, String)> = None;
    for (slack, weight, name) in cfg.constraints(scaled)? {
        if germ_sign(&slack) == Ordering::Less {
            return Err(ThresholdError::NotLogCanonical(format!("{name} fails before scaling")));
        }
        match germ_sign(&weight) {
            Ordering::Equal => continue,
            Ordering::Less => {
                return Err(ThresholdError::InvalidArgument(format!("negative scaling weight in {name}")))
            }
            Ordering::Greater => {}
        }
        let f = RationalFunction::new(slack, weight).expect("nonzero weight");
        let better = match &best {
            None => true,
            Some((g, _)) => f.cmp_small_beta(g) == Ordering::Less,
        };
        if better {
            best = Some((f, name));
        }
    }
    let (f, name) = best.ok_or_else(|| ThresholdError::InvalidArgument("no branch is scaled".into()))?;
    Ok(AlphaValue::function(f, AlphaKind::Exact, format!("binding constraint: {name}")))
}

/// Largest `lambda` at one fixed `beta`.
pub fn lct_local_at(cfg: &LocalConfig, scaled: &BTreeSet<usize>, beta: Rational) -> Result<Rational, ThresholdError> {
    let mut best: Option<Rational> = None;
    for (slack, weight, name) in cfg.constraints(scaled)? {
        let (s, w) = (poly_eval(&slack, beta), poly_eval(&weight, beta));
        if s.is_negative() {
            return Err(ThresholdError::NotLogCanonical(format!("{name} fails before scaling")));
        }
        if w.is_zero() {
            continue;
        }
        if w.is_negative() {
            return Err(ThresholdError::InvalidArgument(format!("negative scaling weight in {name}")));
        }
        let v = s / w;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.ok_or_else(|| ThresholdError::InvalidArgument("no branch is scaled".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn all(n: usize) -> BTreeSet<usize> {
        (0..n).collect()
    }

    #[test]
    fn eckardt_point() {
        let cfg = LocalConfig::transverse(vec![
            Branch::scaled("L1", int(1)),
            Branch::scaled("L2", int(1)),
            Branch::boundary("C"),
        ]);
        let v = lct_local(&cfg, &all(3)).unwrap();
        assert_eq!(v.value.to_text(), "(1 + b)/(2 + b)");
        assert_eq!(lct_local_at(&cfg, &all(3), frac(1, 2)).unwrap(), frac(3, 5));
    }

    #[test]
    fn tangent_fiber() {
        let cfg = LocalConfig::tangent(Branch::scaled("F", int(1)), Branch::boundary("C"), 2);
        let v = lct_local(&cfg, &all(2)).unwrap();
        assert_eq!(v.value.to_text(), "(1 + 2*b)/(2 + 2*b)");
    }

    #[test]
    fn single_branch_and_rejections() {
        let cfg = LocalConfig::transverse(vec![Branch::scaled("A", int(3))]);
        assert_eq!(lct_local(&cfg, &all(1)).unwrap().as_number(), Some(frac(1, 3)));
        let three = LocalConfig {
            branches: vec![Branch::scaled("A", int(1)), Branch::scaled("B", int(1)), Branch::scaled("C", int(1))],
            contact: vec![vec![0, 2, 1], vec![2, 0, 1], vec![1, 1, 0]],
        };
        assert!(matches!(lct_local(&three, &all(3)), Err(ThresholdError::Unsupported(_))));
    }
}
