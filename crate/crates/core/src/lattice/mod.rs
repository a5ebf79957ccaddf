//! Picard lattices of `P^2`, Hirzebruch surfaces and their point blow-ups,
//! together with divisors whose coefficients depend polynomially on the
//! boundary weights.

mod basis;
mod divisor;
mod poly;
mod sign;

pub use basis::{BaseModel, PicardBasis};
pub use divisor::{BetaDivisor, DivisorClass};
pub use poly::BetaPolynomial;
pub use sign::{small_beta_sign, SignDecision, SignMode, SmallBetaVerdict, Witness, WitnessPath};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("divisors live on different Picard lattices ({left} vs {right})")]
    BasisMismatch { left: String, right: String },
    #[error("coordinate vector has length {got}, lattice has rank {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("polynomial degree would exceed 2")]
    DegreeOverflow,
    #[error("polynomials use {left} and {right} weight variables")]
    VariableMismatch { left: usize, right: usize },
    #[error("{0}")]
    InvalidBasis(String),
}
