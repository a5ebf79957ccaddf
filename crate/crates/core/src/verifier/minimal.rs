use super::{CertifiedScope, VerifyError};
use crate::lattice::DivisorClass;
use crate::rational::int;
use crate::surface::{test_curves, CurveKind, SurfacePair, TestCurve};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ContractionKind {
    /// A (-1)-curve disjoint from the boundary.
    OffBoundary,
    /// A (-1)-curve meeting the boundary transversally in one point.
    MeetsBoundaryOnce,
    /// A boundary component that is a (-1)-curve at the end of a chain.
    /// Never needed for pairs one blow-up level above a base model.
    BoundaryTailComponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionStep {
    #[serde(serialize_with = "class_text")]
    pub contracted_class: DivisorClass,
    pub kind: ContractionKind,
    /// Picard rank after the step.
    pub rank_after: usize,
}

fn class_text<S: serde::Serializer>(c: &DivisorClass, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_text())
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub offending: Option<TestCurve>,
    pub scope: CertifiedScope,
}

/// Looks for a (-1)-curve other than a boundary component meeting the boundary.
pub fn is_minimal(pair: &SurfacePair) -> Result<MinimalityReport, VerifyError> {
    let set = test_curves(pair)?;
    let c = pair.boundary_sum();
    let offending = set
        .explicit
        .into_iter()
        .filter(|t| t.kind != CurveKind::Boundary)
        .find(|t| {
            t.class.self_intersection() == int(-1)
                && t.class.arithmetic_genus() == int(0)
                && t.class.intersect(&c).expect("same lattice") >= int(1)
        });
    Ok(MinimalityReport {
        minimal: offending.is_none(),
        offending,
        scope: if pair.provenance().is_some() {
            CertifiedScope::CatalogComplete
        } else {
            CertifiedScope::SuppliedTestSetOnly
        },
    })
}

/// Contracts exceptional curves until the base model is reached.
///
/// Curves off the boundary go first, then those meeting it once, each in
/// basis order. The pair keeps its provenance-free base boundary.
pub fn minimal_model(pair: &SurfacePair) -> Result<(SurfacePair, Vec<ContractionStep>), VerifyError> {
    let mut current = pair.clone();
    let mut steps = Vec::new();
    while !current.points().is_empty() {
        let pts = current.points();
        let (index, kind) = if let Some(i) = pts.iter().position(|p| p.on.is_empty()) {
            (i, ContractionKind::OffBoundary)
        } else if let Some(i) = pts.iter().position(|p| p.on.len() == 1) {
            (i, ContractionKind::MeetsBoundaryOnce)
        } else {
            return Err(VerifyError::Inconsistent(format!(
                "every remaining exceptional curve of {} meets the boundary twice",
                current.basis()
            )));
        };
        let e = current.exceptional(index);
        let meets = e.intersect(&current.boundary_sum()).expect("same lattice");
        let expected = if kind == ContractionKind::OffBoundary { 0 } else { 1 };
        if meets != int(expected) || e.self_intersection() != int(-1) {
            return Err(VerifyError::Inconsistent(format!(
                "exceptional curve {e} has boundary degree {meets}"
            )));
        }
        current = current.without_point(index)?;
        steps.push(ContractionStep {
            contracted_class: e,
            kind,
            rank_after: current.basis().rank(),
        });
    }
    Ok((current.base_pair(), steps))
}
