use super::LatticeError;
use crate::rational::{int, Rational};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// The minimal rational surface a blow-up tower starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseModel {
    /// The projective plane, generator `H`.
    P2,
    /// The Hirzebruch surface `F_n`, generators the negative section `Z`
    /// (`Z^2 = -n`) and the fiber `F`.
    Fn(u32),
}

impl BaseModel {
    pub fn rank(self) -> usize {
        match self {
            BaseModel::P2 => 1,
            BaseModel::Fn(_) => 2,
        }
    }

    fn gram(self, i: usize, j: usize) -> i128 {
        match self {
            BaseModel::P2 => 1,
            BaseModel::Fn(n) => match (i, j) {
                (0, 0) => -(n as i128),
                (1, 1) => 0,
                _ => 1,
            },
        }
    }

    fn canonical(self) -> Vec<Rational> {
        match self {
            BaseModel::P2 => vec![int(-3)],
            BaseModel::Fn(n) => vec![int(-2), int(-(n as i128) - 2)],
        }
    }

    fn generator_names(self) -> Vec<String> {
        match self {
            BaseModel::P2 => vec!["H".into()],
            BaseModel::Fn(_) => vec!["Z".into(), "F".into()],
        }
    }
}

impl fmt::Display for BaseModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseModel::P2 => write!(f, "P2"),
            BaseModel::Fn(n) => write!(f, "F{n}"),
        }
    }
}

/// An ordered Z-basis of a Picard lattice.
///
/// Blow-up generators `E_i` are appended after the parent's generators and
/// are orthogonal to everything else with `E_i^2 = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PicardBasis {
    Base(BaseModel),
    BlowUp { parent: Arc<PicardBasis>, points: usize },
}

impl PicardBasis {
    pub fn p2() -> Arc<Self> {
        Arc::new(PicardBasis::Base(BaseModel::P2))
    }

    pub fn hirzebruch(n: u32) -> Arc<Self> {
        Arc::new(PicardBasis::Base(BaseModel::Fn(n)))
    }

    pub fn blow_up(parent: &Arc<Self>, points: usize) -> Result<Arc<Self>, LatticeError> {
        if points == 0 {
            return Err(LatticeError::InvalidBasis(
                "a blow-up needs at least one point".into(),
            ));
        }
        Ok(Arc::new(PicardBasis::BlowUp {
            parent: parent.clone(),
            points,
        }))
    }

    pub fn rank(&self) -> usize {
        match self {
            PicardBasis::Base(m) => m.rank(),
            PicardBasis::BlowUp { parent, points } => parent.rank() + points,
        }
    }

    pub fn base_model(&self) -> BaseModel {
        match self {
            PicardBasis::Base(m) => *m,
            PicardBasis::BlowUp { parent, .. } => parent.base_model(),
        }
    }

    /// Number of nested blow-up levels above the base model.
    pub fn depth(&self) -> usize {
        match self {
            PicardBasis::Base(_) => 0,
            PicardBasis::BlowUp { parent, .. } => 1 + parent.depth(),
        }
    }

    /// Total number of exceptional generators.
    pub fn exceptional_count(&self) -> usize {
        self.rank() - self.base_model().rank()
    }

    pub fn gram(&self, i: usize, j: usize) -> i128 {
        let base = self.base_model();
        let b = base.rank();
        if i < b && j < b {
            base.gram(i, j)
        } else if i == j {
            -1
        } else {
            0
        }
    }

    pub fn canonical_coords(&self) -> Vec<Rational> {
        let mut k = self.base_model().canonical();
        k.resize(self.rank(), int(1));
        k
    }

    pub fn generator_names(&self) -> Vec<String> {
        let mut names = self.base_model().generator_names();
        for i in 1..=self.exceptional_count() {
            names.push(format!("E{i}"));
        }
        names
    }

    /// Index of the `i`-th exceptional generator (0-based).
    pub fn exceptional_index(&self, i: usize) -> usize {
        self.base_model().rank() + i
    }
}

impl fmt::Display for PicardBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PicardBasis::Base(m) => write!(f, "{m}"),
            PicardBasis::BlowUp { parent, points } => write!(f, "Bl_{points}({parent})"),
        }
    }
}
