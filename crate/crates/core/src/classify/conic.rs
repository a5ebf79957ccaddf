use super::positivity::{positivity_class, PositivityClass};
use crate::lattice::DivisorClass;
use crate::rational::int;
use crate::surface::{dual_graph, SurfacePair};
use crate::verifier::VerifyError;
use num_integer::Integer;
use serde::Serialize;
use std::collections::BTreeMap;

/// The morphism to `P^1` given by `|-K_S - C|` for a `Beth` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicBundle {
    /// Connected components of the boundary.
    pub l: usize,
    #[serde(serialize_with = "crate::surface::json::class_text")]
    pub fiber_class: DivisorClass,
    /// `h^0(-K_S - C)`, equal to `1 + l`.
    pub sections: i128,
    /// Each reducible fiber as its two components.
    #[serde(serialize_with = "pairs_text")]
    pub reducible_fibers: Vec<(DivisorClass, DivisorClass)>,
}

fn pairs_text<S: serde::Serializer>(v: &[(DivisorClass, DivisorClass)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (a, b) in v {
        seq.serialize_element(&[a.to_text(), b.to_text()])?;
    }
    seq.end()
}

pub fn conic_bundle(pair: &SurfacePair) -> Result<ConicBundle, VerifyError> {
    let class = positivity_class(pair)?;
    if class != PositivityClass::Beth {
        return Err(VerifyError::Inconsistent(format!(
            "conic bundles are defined for Beth pairs, not {class}"
        )));
    }
    let d0 = pair.log_anticanonical_class();
    let l = dual_graph(pair).connected_components();
    let coords = d0
        .coords()
        .iter()
        .map(|c| {
            let (q, r) = c.numer().div_rem(&(l as i128));
            if c.is_integer() && r == 0 {
                Ok(int(q))
            } else {
                Err(VerifyError::Inconsistent(format!("{d0} is not divisible by {l}")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let fiber = DivisorClass::new(pair.basis(), coords).expect("rank matches");
    let k = pair.canonical();
    let ksq = |c: &DivisorClass, d: &DivisorClass| c.intersect(d).expect("same lattice");
    if fiber.self_intersection() != int(0) || ksq(&k, &fiber) != int(-2) {
        return Err(VerifyError::Inconsistent(format!("{fiber} is not a conic class")));
    }
    let sections = *d0.euler_characteristic().numer();
    let mut by_fiber: BTreeMap<(u8, u32), Vec<usize>> = BTreeMap::new();
    for (i, p) in pair.points().iter().enumerate() {
        if ksq(&pair.exceptional(i), &fiber) != int(0) {
            continue;
        }
        let key = match p.fiber_group {
            Some(g) => (0, g),
            None => (1, i as u32),
        };
        by_fiber.entry(key).or_default().push(i);
    }
    let mut reducible_fibers = Vec::new();
    for pts in by_fiber.into_values() {
        if pts.len() != 1 {
            return Err(VerifyError::Inconsistent(format!(
                "fiber through {} points is not a pair of (-1)-curves",
                pts.len()
            )));
        }
        let e = pair.exceptional(pts[0]);
        let rest = &fiber - &e;
        reducible_fibers.push((e, rest));
    }
    Ok(ConicBundle {
        l,
        fiber_class: fiber,
        sections,
        reducible_fibers,
    })
}
