//! The JSON pair description read and written by the command line tool.

use super::{BlowUpPoint, Provenance, SurfaceError, SurfacePair};
use crate::lattice::{BaseModel, DivisorClass};
use crate::rational::{self, Rational};
use serde::{Deserialize, Serialize, Serializer};

/// `{"model": "P2" | {"Fn": n}, "boundary": [[coords]], "blowups": [...]}`.
///
/// Boundary classes are given on the base model: one coordinate (`dH`) on
/// `P^2`, two (`aZ + bF`) on `F_n`, written as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDescription {
    pub model: BaseModel,
    #[serde(with = "boundary_serde")]
    pub boundary: Vec<Vec<Rational>>,
    #[serde(default)]
    pub blowups: Vec<BlowUpPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Provenance>,
}

mod boundary_serde {
    use super::*;
    use serde::Deserializer;

    #[derive(Serialize)]
    struct Row<'a>(#[serde(with = "crate::rational::serde_vec")] &'a Vec<Rational>);

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(Row))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        #[derive(Deserialize)]
        struct RowIn(#[serde(with = "crate::rational::serde_vec")] Vec<Rational>);
        let rows = Vec::<RowIn>::deserialize(d)?;
        Ok(rows.into_iter().map(|r| r.0).collect())
    }
}

impl PairDescription {
    pub fn from_pair(pair: &SurfacePair) -> Self {
        PairDescription {
            model: pair.model(),
            boundary: pair
                .base_boundary()
                .iter()
                .map(|c| c.coords().to_vec())
                .collect(),
            blowups: pair.points().to_vec(),
            family: pair.provenance().cloned(),
        }
    }

    pub fn build(&self) -> Result<SurfacePair, SurfaceError> {
        let ints: Vec<Vec<i128>> = self
            .boundary
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| {
                        if q.is_integer() {
                            Ok(*q.numer())
                        } else {
                            Err(SurfaceError::Malformed(format!(
                                "boundary coordinate {} is not an integer",
                                rational::format(q)
                            )))
                        }
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let rank = self.model.rank();
        if let Some(row) = ints.iter().find(|r| r.len() != rank) {
            return Err(SurfaceError::Malformed(format!(
                "boundary class has {} coordinates, {} expects {rank}",
                row.len(),
                self.model
            )));
        }
        let base = match self.model {
            BaseModel::P2 => {
                let degrees = ints
                    .iter()
                    .map(|r| u32::try_from(r[0]).map_err(|_| SurfaceError::InvalidComponent {
                        index: 0,
                        reason: format!("degree {} is negative", r[0]),
                    }))
                    .collect::<Result<Vec<_>, _>>()?;
                SurfacePair::make_p2(&degrees)?
            }
            BaseModel::Fn(n) => {
                let classes: Vec<(i128, i128)> = ints.iter().map(|r| (r[0], r[1])).collect();
                SurfacePair::make_fn(n, &classes)?
            }
        };
        let pair = base.blow_up(&self.blowups)?;
        Ok(match &self.family {
            Some(p) => pair.with_provenance(p.clone()),
            None => pair,
        })
    }

    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        serde_json::from_str(text).map_err(|e| SurfaceError::Malformed(e.to_string()))
    }
}

pub(crate) fn class_text<S: Serializer>(c: &DivisorClass, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_text())
}

pub(crate) fn opt_class_text<S: Serializer>(c: &Option<DivisorClass>, s: S) -> Result<S::Ok, S::Error> {
    match c {
        Some(c) => s.serialize_str(&c.to_text()),
        None => s.serialize_none(),
    }
}
