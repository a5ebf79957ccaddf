//! Small-weight ampleness of `-K_S - sum (1 - beta_j) C_j`, minimality, and
//! contraction to a minimal model.

mod assess;
mod minimal;

pub use assess::{assess, Assessment, CheckOutcome, Failure, Judge};
pub use minimal::{is_minimal, minimal_model, ContractionKind, ContractionStep, MinimalityReport};

use crate::lattice::{BetaDivisor, BetaPolynomial, SignMode, SmallBetaVerdict};
use crate::rational::Rational;
use crate::surface::{test_curves, validate_configuration, Diagnostic, Severity, SurfaceError, SurfacePair};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("configuration rejected: {0}")]
    Fatal(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// How far a verdict's completeness claim reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertifiedScope {
    /// The pair has a catalog shape, for which the curve inventory and the
    /// generic bounds cover every irreducible curve.
    CatalogComplete,
    /// Only the generated inventory and bounds were checked.
    SuppliedTestSetOnly,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    /// Every weight small independently.
    pub strong: SmallBetaVerdict,
    /// All weights equal and small.
    pub diagonal: SmallBetaVerdict,
    /// First failing check of the strong test.
    pub failing_inequality: Option<Failure>,
    pub diagonal_failure: Option<Failure>,
    pub certified_scope: CertifiedScope,
    /// `(K_S + (1 - beta) C)^2`.
    pub square: BetaPolynomial,
    pub divisor: String,
    pub checks: Vec<CheckOutcome>,
    pub diagnostics: Vec<Diagnostic>,
}

/// `-K_S - sum (1 - beta_j) C_j`, one weight per boundary component.
pub fn log_anticanonical(pair: &SurfacePair) -> BetaDivisor {
    pair.log_anticanonical()
}

fn boundary_weights(pair: &SurfacePair) -> Vec<BetaPolynomial> {
    let r = pair.component_count();
    (0..r).map(|j| BetaPolynomial::var(r, j)).collect()
}

fn reject_fatal(pair: &SurfacePair) -> Result<Vec<Diagnostic>, VerifyError> {
    let diagnostics = validate_configuration(pair);
    if let Some(d) = diagnostics.iter().find(|d| d.severity == Severity::Fatal) {
        return Err(VerifyError::Fatal(d.message.clone()));
    }
    Ok(diagnostics)
}

/// Decides whether the pair is (strongly) asymptotically log del Pezzo.
pub fn verify(pair: &SurfacePair) -> Result<Verdict, VerifyError> {
    let diagnostics = reject_fatal(pair)?;
    let set = test_curves(pair)?;
    let d = log_anticanonical(pair);
    let weights = boundary_weights(pair);
    let strong = assess(pair, &set, &d, Some(&weights), &Judge::Small(SignMode::Orthant));
    let diagonal = assess(pair, &set, &d, Some(&weights), &Judge::Small(SignMode::Diagonal));
    if strong.verdict == SmallBetaVerdict::Positive && diagonal.verdict != SmallBetaVerdict::Positive {
        return Err(VerifyError::Inconsistent(
            "strong verdict positive but diagonal verdict is not".into(),
        ));
    }
    let mut checks = strong.checks;
    for (c, dg) in checks.iter_mut().zip(diagonal.checks) {
        c.diagonal = dg.strong;
    }
    Ok(Verdict {
        strong: strong.verdict,
        diagonal: diagonal.verdict,
        failing_inequality: strong.failure,
        diagonal_failure: diagonal.failure,
        certified_scope: if pair.provenance().is_some() {
            CertifiedScope::CatalogComplete
        } else {
            CertifiedScope::SuppliedTestSetOnly
        },
        square: d.square(),
        divisor: d.to_text(),
        checks,
        diagnostics,
    })
}

/// Ampleness of the log anticanonical divisor at fixed weights.
pub fn verify_at(pair: &SurfacePair, betas: &[Rational]) -> Result<Assessment, VerifyError> {
    reject_fatal(pair)?;
    if betas.len() != pair.component_count() {
        return Err(VerifyError::Surface(SurfaceError::Malformed(format!(
            "{} weights given for {} components",
            betas.len(),
            pair.component_count()
        ))));
    }
    let set = test_curves(pair)?;
    let d = log_anticanonical(pair);
    let weights = boundary_weights(pair);
    Ok(assess(pair, &set, &d, Some(&weights), &Judge::At(betas.to_vec())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::surface::BlowUpPoint;

    #[test]
    fn smooth_conic_in_the_plane() {
        let pair = SurfacePair::make_p2(&[2]).unwrap();
        let v = verify(&pair).unwrap();
        assert_eq!(v.strong, SmallBetaVerdict::Positive);
        assert_eq!(v.certified_scope, CertifiedScope::SuppliedTestSetOnly);
        assert_eq!(v.square.constant_term(), int(1));
    }

    #[test]
    fn plane_with_too_many_points_on_a_line() {
        let pair = SurfacePair::make_p2(&[1])
            .unwrap()
            .blow_up(&[BlowUpPoint::off_boundary()])
            .unwrap();
        // -K - C + beta C = 2H - E1 + beta H is ample; the off-boundary point is harmless.
        assert_eq!(verify(&pair).unwrap().strong, SmallBetaVerdict::Positive);
        let bad = SurfacePair::make_p2(&[3]).unwrap().blow_up(&vec![BlowUpPoint::on(0); 9]).unwrap();
        let v = verify(&bad).unwrap();
        assert_eq!(v.strong, SmallBetaVerdict::NotPositive);
        assert_eq!(v.failing_inequality.unwrap().subject, "D^2");
    }
}
