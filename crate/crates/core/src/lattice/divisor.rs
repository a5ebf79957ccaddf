use super::{BetaPolynomial, LatticeError, PicardBasis};
use crate::rational::{int, Rational, Short};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

fn same_basis(a: &Arc<PicardBasis>, b: &Arc<PicardBasis>) -> Result<(), LatticeError> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(LatticeError::BasisMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

/// A divisor class with rational coordinates in a fixed Picard basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    basis: Arc<PicardBasis>,
    coords: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(basis: &Arc<PicardBasis>, coords: Vec<Rational>) -> Result<Self, LatticeError> {
        if coords.len() != basis.rank() {
            return Err(LatticeError::RankMismatch {
                got: coords.len(),
                rank: basis.rank(),
            });
        }
        Ok(DivisorClass {
            basis: basis.clone(),
            coords,
        })
    }

    pub fn from_ints(basis: &Arc<PicardBasis>, coords: &[i128]) -> Result<Self, LatticeError> {
        Self::new(basis, coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(basis: &Arc<PicardBasis>) -> Self {
        DivisorClass {
            basis: basis.clone(),
            coords: vec![Rational::zero(); basis.rank()],
        }
    }

    /// The `i`-th basis generator.
    pub fn generator(basis: &Arc<PicardBasis>, i: usize) -> Self {
        let mut d = Self::zero(basis);
        d.coords[i] = int(1);
        d
    }

    /// The `i`-th exceptional generator `E_{i+1}`.
    pub fn exceptional(basis: &Arc<PicardBasis>, i: usize) -> Self {
        Self::generator(basis, basis.exceptional_index(i))
    }

    pub fn canonical(basis: &Arc<PicardBasis>) -> Self {
        DivisorClass {
            basis: basis.clone(),
            coords: basis.canonical_coords(),
        }
    }

    pub fn basis(&self) -> &Arc<PicardBasis> {
        &self.basis
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Rational {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn intersect(&self, other: &Self) -> Result<Rational, LatticeError> {
        same_basis(&self.basis, &other.basis)?;
        Ok(bilinear(&self.basis, &self.coords, &other.coords))
    }

    pub fn self_intersection(&self) -> Rational {
        bilinear(&self.basis, &self.coords, &self.coords)
    }

    /// Arithmetic genus from adjunction, `(K.D + D^2)/2 + 1`.
    pub fn arithmetic_genus(&self) -> Rational {
        let k = Self::canonical(&self.basis);
        (k.intersect(self).expect("same basis") + self.self_intersection()) / int(2) + int(1)
    }

    /// Holomorphic Euler characteristic `1 + D.(D - K)/2` of `O(D)` on a rational surface.
    pub fn euler_characteristic(&self) -> Rational {
        let k = Self::canonical(&self.basis);
        let d_minus_k = self.checked_sub(&k).expect("same basis");
        int(1) + self.intersect(&d_minus_k).expect("same basis") / int(2)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LatticeError> {
        same_basis(&self.basis, &other.basis)?;
        Ok(DivisorClass {
            basis: self.basis.clone(),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LatticeError> {
        self.checked_add(&other.scale(int(-1)))
    }

    pub fn scale(&self, s: Rational) -> Self {
        DivisorClass {
            basis: self.basis.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Total transform to a blow-up whose parent is this class's lattice.
    pub fn pullback(&self, target: &Arc<PicardBasis>) -> Result<Self, LatticeError> {
        match target.as_ref() {
            PicardBasis::BlowUp { parent, .. } => {
                same_basis(&self.basis, parent)?;
                let mut coords = self.coords.clone();
                coords.resize(target.rank(), Rational::zero());
                Ok(DivisorClass {
                    basis: target.clone(),
                    coords,
                })
            }
            PicardBasis::Base(_) => Err(LatticeError::InvalidBasis(format!(
                "{target} is not a blow-up"
            ))),
        }
    }

    /// Image under the contraction that forgets the listed coordinates.
    pub fn push_forward(&self, target: &Arc<PicardBasis>, dropped: &[usize]) -> Result<Self, LatticeError> {
        let coords: Vec<Rational> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(i, _)| !dropped.contains(i))
            .map(|(_, c)| *c)
            .collect();
        Self::new(target, coords)
    }

    /// Coefficients over the generator names, e.g. `2Z + F - E1`.
    pub fn to_text(&self) -> String {
        let names = self.basis.generator_names();
        linear_text(self.coords.iter().zip(names).map(|(c, n)| (*c, n)))
    }
}

pub(crate) fn linear_text(items: impl Iterator<Item = (Rational, String)>) -> String {
    let mut s = String::new();
    for (c, name) in items {
        if c.is_zero() {
            continue;
        }
        let neg = c < Rational::zero();
        let mag = if neg { -c } else { c };
        let body = if mag == int(1) {
            name
        } else {
            format!("{}{}", Short(&mag), name)
        };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn bilinear(basis: &PicardBasis, a: &[Rational], b: &[Rational]) -> Rational {
    let base = basis.base_model().rank();
    let mut acc = Rational::zero();
    for i in 0..base {
        for j in 0..base {
            let g = basis.gram(i, j);
            if g != 0 {
                acc += a[i] * b[j] * int(g);
            }
        }
    }
    for i in base..a.len() {
        acc -= a[i] * b[i];
    }
    acc
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_add(rhs).expect("divisors on different lattices")
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_sub(rhs).expect("divisors on different lattices")
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scale(int(-1))
    }
}

impl Mul<Rational> for &DivisorClass {
    type Output = DivisorClass;
    fn mul(self, rhs: Rational) -> DivisorClass {
        self.scale(rhs)
    }
}

/// A divisor whose coordinates are affine-linear polynomials in the weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaDivisor {
    basis: Arc<PicardBasis>,
    vars: usize,
    coords: Vec<BetaPolynomial>,
}

impl BetaDivisor {
    pub fn new(basis: &Arc<PicardBasis>, coords: Vec<BetaPolynomial>) -> Result<Self, LatticeError> {
        if coords.len() != basis.rank() {
            return Err(LatticeError::RankMismatch {
                got: coords.len(),
                rank: basis.rank(),
            });
        }
        let vars = coords.first().map_or(0, |p| p.vars());
        for p in &coords {
            if p.vars() != vars {
                return Err(LatticeError::VariableMismatch {
                    left: vars,
                    right: p.vars(),
                });
            }
            if p.degree().unwrap_or(0) > 1 {
                return Err(LatticeError::DegreeOverflow);
            }
        }
        Ok(BetaDivisor {
            basis: basis.clone(),
            vars,
            coords,
        })
    }

    pub fn constant(class: &DivisorClass, vars: usize) -> Self {
        BetaDivisor {
            basis: class.basis.clone(),
            vars,
            coords: class
                .coords
                .iter()
                .map(|c| BetaPolynomial::constant(vars, *c))
                .collect(),
        }
    }

    /// `sum_k weights[k] * classes[k]`.
    pub fn combination(
        basis: &Arc<PicardBasis>,
        vars: usize,
        terms: &[(BetaPolynomial, DivisorClass)],
    ) -> Result<Self, LatticeError> {
        let mut coords = vec![BetaPolynomial::zero(vars); basis.rank()];
        for (w, class) in terms {
            same_basis(basis, &class.basis)?;
            for (slot, c) in coords.iter_mut().zip(&class.coords) {
                if !c.is_zero() {
                    *slot = slot.checked_add(&w.scale(*c))?;
                }
            }
        }
        Self::new(basis, coords)
    }

    pub fn basis(&self) -> &Arc<PicardBasis> {
        &self.basis
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn coords(&self) -> &[BetaPolynomial] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &BetaPolynomial {
        &self.coords[i]
    }

    pub fn intersect_class(&self, class: &DivisorClass) -> Result<BetaPolynomial, LatticeError> {
        same_basis(&self.basis, &class.basis)?;
        let mut acc = BetaPolynomial::zero(self.vars);
        let rank = self.basis.rank();
        for i in 0..rank {
            for j in 0..rank {
                let g = self.basis.gram(i, j);
                let c = class.coords[j];
                if g != 0 && !c.is_zero() {
                    acc = acc.checked_add(&self.coords[i].scale(c * int(g)))?;
                }
            }
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Self) -> Result<BetaPolynomial, LatticeError> {
        same_basis(&self.basis, &other.basis)?;
        let mut acc = BetaPolynomial::zero(self.vars);
        let rank = self.basis.rank();
        for i in 0..rank {
            for j in 0..rank {
                let g = self.basis.gram(i, j);
                if g != 0 {
                    let prod = self.coords[i].checked_mul(&other.coords[j])?;
                    acc = acc.checked_add(&prod.scale(int(g)))?;
                }
            }
        }
        Ok(acc)
    }

    pub fn square(&self) -> BetaPolynomial {
        self.intersect(self).expect("affine coordinates multiply to degree 2")
    }

    /// The class obtained by fixing every weight.
    pub fn evaluate(&self, point: &[Rational]) -> DivisorClass {
        DivisorClass {
            basis: self.basis.clone(),
            coords: self.coords.iter().map(|p| p.eval(point)).collect(),
        }
    }

    /// Value at `beta = 0`.
    pub fn constant_part(&self) -> DivisorClass {
        DivisorClass {
            basis: self.basis.clone(),
            coords: self.coords.iter().map(|p| p.constant_term()).collect(),
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LatticeError> {
        same_basis(&self.basis, &other.basis)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_add(&-b))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(&self.basis, coords)
    }

    pub fn to_text(&self) -> String {
        let names = self.basis.generator_names();
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(names)
            .filter(|(p, _)| !p.is_zero())
            .map(|(p, n)| format!("({p}){n}"))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for BetaDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
