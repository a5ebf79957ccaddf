//! Exact decision procedures for asymptotically log del Pezzo surface pairs.
//!
//! A pair `(S, C)` is a smooth rational surface with a simple normal
//! crossing boundary `C = C_1 + ... + C_r`. Everything is decided on the
//! Picard lattice with exact rational arithmetic; the boundary weights
//! `beta_j` enter as polynomial variables and positivity is decided for
//! all sufficiently small weights.

#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod cli;
pub mod lattice;
pub mod rational;
pub mod surface;
pub mod thresholds;
pub mod verifier;

pub use lattice::{
    small_beta_sign, BetaDivisor, BetaPolynomial, DivisorClass, LatticeError, PicardBasis,
    SignMode, SmallBetaVerdict,
};
pub use rational::Rational;
pub use surface::{BlowUpPoint, SurfaceError, SurfacePair};
pub use verifier::{verify, Verdict};
