use crate::lattice::{BetaDivisor, SmallBetaVerdict};
use crate::rational::{int, Rational};
use crate::surface::{test_curves, SurfacePair};
use crate::verifier::{assess, Judge, VerifyError};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// How positive `-K_S - C` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PositivityClass {
    /// The boundary is anticanonical.
    Aleph,
    /// `(K_S + C)^2 = 0`.
    Beth,
    /// `-K_S - C` is big and nef but not ample.
    Gimel,
    /// `-K_S - C` is ample.
    Daleth,
}

impl PositivityClass {
    pub const ALL: [PositivityClass; 4] = [Self::Aleph, Self::Beth, Self::Gimel, Self::Daleth];

    pub fn name(self) -> &'static str {
        match self {
            Self::Aleph => "Aleph",
            Self::Beth => "Beth",
            Self::Gimel => "Gimel",
            Self::Daleth => "Daleth",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Self::Aleph => "ℵ",
            Self::Beth => "ℶ",
            Self::Gimel => "ℷ",
            Self::Daleth => "ℸ",
        }
    }
}

impl fmt::Display for PositivityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies a pair from the positivity of `-K_S - C` at weight zero.
///
/// Meant for pairs whose strong verdict is positive; a pair where
/// `-K_S - C` is not even nef is reported as inconsistent.
pub fn positivity_class(pair: &SurfacePair) -> Result<PositivityClass, VerifyError> {
    let d0 = pair.log_anticanonical_class();
    if d0.is_zero() {
        return Ok(PositivityClass::Aleph);
    }
    let square = d0.self_intersection();
    if square.is_zero() {
        return Ok(PositivityClass::Beth);
    }
    let set = test_curves(pair)?;
    let r = pair.component_count();
    let d = BetaDivisor::constant(&d0, r);
    let zeros: Vec<Rational> = vec![int(0); r];
    let ample = assess(pair, &set, &d, None, &Judge::At(zeros.clone()));
    if ample.verdict == SmallBetaVerdict::Positive {
        return Ok(PositivityClass::Daleth);
    }
    let nef = assess(pair, &set, &d, None, &Judge::NefAt(zeros));
    if nef.verdict == SmallBetaVerdict::Positive && square > int(0) {
        return Ok(PositivityClass::Gimel);
    }
    let what = nef
        .failure
        .map(|f| format!("fails on {}", f.subject))
        .unwrap_or_else(|| "is not certified nef".into());
    Err(VerifyError::Inconsistent(format!("-K_S - C = {d0} {what}")))
}
