//! Surface pairs `(S, C)`: a base model (`P^2` or `F_n`) with boundary
//! curves, blown up at points described only by their incidence with the
//! boundary, plus the curve inventories used to decide ampleness.

mod curves;
pub(crate) mod json;
mod pair;
mod validate;

pub use curves::{test_curves, Certificate, CertificateKind, CurveKind, Requirement, TestCurve, TestCurveSet};
pub use json::PairDescription;
pub use pair::{BlowUpPoint, Provenance, SurfacePair};
pub use validate::{dual_graph, validate_configuration, Diagnostic, DiagnosticKind, DualGraph, Severity};

use crate::lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("boundary must have at least one component")]
    EmptyBoundary,
    #[error("boundary component {index}: {reason}")]
    InvalidComponent { index: usize, reason: String },
    #[error("point {point}: {reason}")]
    InvalidPoint { point: usize, reason: String },
    #[error("unsupported blow-up tower: {0}")]
    UnsupportedTower(String),
    #[error("malformed pair description: {0}")]
    Malformed(String),
}
