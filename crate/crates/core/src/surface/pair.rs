use super::SurfaceError;
use crate::lattice::{BaseModel, BetaDivisor, BetaPolynomial, DivisorClass, PicardBasis};
use crate::rational::int;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A blown-up point, recorded by which boundary components pass through it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlowUpPoint {
    /// Boundary components through the point (at most two; two means a crossing).
    pub on: Vec<usize>,
    /// Points with the same group id share a fiber of `F_n` (a line on `P^2`)
    /// that is not itself a boundary component.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber_group: Option<u32>,
}

impl BlowUpPoint {
    pub fn on(component: usize) -> Self {
        BlowUpPoint {
            on: vec![component],
            fiber_group: None,
        }
    }

    pub fn off_boundary() -> Self {
        BlowUpPoint {
            on: vec![],
            fiber_group: None,
        }
    }

    pub fn crossing(a: usize, b: usize) -> Self {
        BlowUpPoint {
            on: vec![a.min(b), a.max(b)],
            fiber_group: None,
        }
    }

    pub fn in_group(mut self, group: u32) -> Self {
        self.fiber_group = Some(group);
        self
    }

    pub fn at_crossing(&self) -> bool {
        self.on.len() == 2
    }
}

/// Catalog family and parameters a pair was instantiated from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

impl Provenance {
    /// Concrete label such as `I.9B.3` or `II.6A.2.1`.
    pub fn label(&self) -> String {
        let mut s = self
            .family
            .trim_end_matches(".m")
            .trim_end_matches(".n")
            .to_string();
        if self.family.contains(".n") {
            if let Some(n) = self.n {
                s.push_str(&format!(".{n}"));
            }
        }
        if self.family.ends_with(".m") {
            if let Some(m) = self.m {
                s.push_str(&format!(".{m}"));
            }
        }
        s
    }
}

/// A log smooth pair `(S, C)` with `S` a blow-up of a base model at distinct points.
#[derive(Debug, Clone)]
pub struct SurfacePair {
    base_basis: Arc<PicardBasis>,
    basis: Arc<PicardBasis>,
    base_boundary: Vec<DivisorClass>,
    boundary: Vec<DivisorClass>,
    points: Vec<BlowUpPoint>,
    provenance: Option<Provenance>,
}

/// Whether `a Z + b F` on `F_n` is the class of an irreducible curve.
pub fn irreducible_on_fn(n: u32, a: i128, b: i128) -> bool {
    (a, b) == (1, 0) || (a, b) == (0, 1) || (a >= 1 && b >= 1 && b >= a * n as i128)
}

impl SurfacePair {
    /// `P^2` with boundary components of the given degrees.
    pub fn make_p2(degrees: &[u32]) -> Result<Self, SurfaceError> {
        let basis = PicardBasis::p2();
        let mut boundary = Vec::new();
        for (index, &d) in degrees.iter().enumerate() {
            if d == 0 {
                return Err(SurfaceError::InvalidComponent {
                    index,
                    reason: "degree must be positive".into(),
                });
            }
            boundary.push(DivisorClass::from_ints(&basis, &[d as i128])?);
        }
        Self::from_base(basis, boundary)
    }

    /// `F_n` with boundary components `a Z + b F`.
    pub fn make_fn(n: u32, classes: &[(i128, i128)]) -> Result<Self, SurfaceError> {
        let basis = PicardBasis::hirzebruch(n);
        let mut boundary = Vec::new();
        for (index, &(a, b)) in classes.iter().enumerate() {
            if !irreducible_on_fn(n, a, b) {
                return Err(SurfaceError::InvalidComponent {
                    index,
                    reason: format!("{a}Z + {b}F on F{n} contains no reduced irreducible curve"),
                });
            }
            boundary.push(DivisorClass::from_ints(&basis, &[a, b])?);
        }
        Self::from_base(basis, boundary)
    }

    fn from_base(basis: Arc<PicardBasis>, boundary: Vec<DivisorClass>) -> Result<Self, SurfaceError> {
        if boundary.is_empty() {
            return Err(SurfaceError::EmptyBoundary);
        }
        for (i, c) in boundary.iter().enumerate() {
            for (j, d) in boundary.iter().enumerate().skip(i + 1) {
                // Two distinct curves in one rigid class cannot exist.
                if c == d && c.self_intersection() < int(0) {
                    return Err(SurfaceError::InvalidComponent {
                        index: j,
                        reason: format!("repeats the rigid class {c} of component {i}"),
                    });
                }
                if c.intersect(d)? < int(0) {
                    return Err(SurfaceError::InvalidComponent {
                        index: j,
                        reason: format!("negative intersection with component {i}"),
                    });
                }
            }
        }
        Ok(SurfacePair {
            base_basis: basis.clone(),
            basis,
            base_boundary: boundary.clone(),
            boundary,
            points: Vec::new(),
            provenance: None,
        })
    }

    /// Blows up further distinct points of the base model.
    ///
    /// Points are given by incidence only; they are never infinitely near
    /// to earlier points, so the result stays one level above the base.
    pub fn blow_up(&self, new_points: &[BlowUpPoint]) -> Result<Self, SurfaceError> {
        let mut points = self.points.clone();
        points.extend(new_points.iter().cloned().map(|mut p| {
            p.on.sort_unstable();
            p
        }));
        Self::assemble(
            self.base_basis.clone(),
            self.base_boundary.clone(),
            points,
            self.provenance.clone(),
        )
    }

    pub(crate) fn assemble(
        base_basis: Arc<PicardBasis>,
        base_boundary: Vec<DivisorClass>,
        points: Vec<BlowUpPoint>,
        provenance: Option<Provenance>,
    ) -> Result<Self, SurfaceError> {
        check_points(&base_basis, &base_boundary, &points)?;
        if points.is_empty() {
            return Ok(SurfacePair {
                basis: base_basis.clone(),
                base_basis,
                boundary: base_boundary.clone(),
                base_boundary,
                points,
                provenance,
            });
        }
        let basis = PicardBasis::blow_up(&base_basis, points.len())?;
        let mut boundary = Vec::new();
        for (j, c) in base_boundary.iter().enumerate() {
            let mut t = c.pullback(&basis)?;
            for (i, p) in points.iter().enumerate() {
                if p.on.contains(&j) {
                    t = &t - &DivisorClass::exceptional(&basis, i);
                }
            }
            boundary.push(t);
        }
        Ok(SurfacePair {
            base_basis,
            basis,
            base_boundary,
            boundary,
            points,
            provenance,
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn basis(&self) -> &Arc<PicardBasis> {
        &self.basis
    }

    pub fn base_basis(&self) -> &Arc<PicardBasis> {
        &self.base_basis
    }

    pub fn model(&self) -> BaseModel {
        self.basis.base_model()
    }

    /// Proper transforms of the boundary components.
    pub fn boundary(&self) -> &[DivisorClass] {
        &self.boundary
    }

    /// Boundary components on the base model.
    pub fn base_boundary(&self) -> &[DivisorClass] {
        &self.base_boundary
    }

    pub fn points(&self) -> &[BlowUpPoint] {
        &self.points
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn component_count(&self) -> usize {
        self.boundary.len()
    }

    pub fn canonical(&self) -> DivisorClass {
        DivisorClass::canonical(&self.basis)
    }

    pub fn boundary_sum(&self) -> DivisorClass {
        self.boundary
            .iter()
            .fold(DivisorClass::zero(&self.basis), |acc, c| &acc + c)
    }

    /// `-K_S - C`, the log anticanonical class at weight zero.
    pub fn log_anticanonical_class(&self) -> DivisorClass {
        &(-&self.canonical()) - &self.boundary_sum()
    }

    /// Exceptional generator of the `i`-th point.
    pub fn exceptional(&self, i: usize) -> DivisorClass {
        DivisorClass::exceptional(&self.basis, i)
    }

    /// Pullback of a base-model class.
    pub fn pullback(&self, base_class: &DivisorClass) -> DivisorClass {
        if self.points.is_empty() {
            base_class.clone()
        } else {
            base_class.pullback(&self.basis).expect("base class lives on the base lattice")
        }
    }

    /// `-K_S - sum (1 - beta_j) C_j` with one weight per component.
    pub fn log_anticanonical(&self) -> BetaDivisor {
        let r = self.boundary.len();
        let mut terms = vec![(BetaPolynomial::integer(r, -1), self.canonical())];
        for (j, c) in self.boundary.iter().enumerate() {
            let w = &BetaPolynomial::var(r, j) - &BetaPolynomial::integer(r, 1);
            terms.push((w, c.clone()));
        }
        BetaDivisor::combination(&self.basis, r, &terms).expect("classes share the lattice")
    }

    /// Points grouped by the fiber (line) through them, each group of size >= 2.
    pub fn fiber_groups(&self) -> BTreeMap<u32, Vec<usize>> {
        let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.points.iter().enumerate() {
            if let Some(g) = p.fiber_group {
                groups.entry(g).or_default().push(i);
            }
        }
        groups
    }

    /// Points lying on component `j`.
    pub fn points_on(&self, j: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| self.points[i].on.contains(&j))
            .collect()
    }

    /// Removes the `i`-th point, i.e. contracts its exceptional curve.
    pub fn without_point(&self, i: usize) -> Result<Self, SurfaceError> {
        let mut points = self.points.clone();
        points.remove(i);
        Self::assemble(
            self.base_basis.clone(),
            self.base_boundary.clone(),
            points,
            self.provenance.clone(),
        )
    }

    /// The same boundary on the base model with no points blown up.
    pub fn base_pair(&self) -> Self {
        Self::assemble(
            self.base_basis.clone(),
            self.base_boundary.clone(),
            Vec::new(),
            None,
        )
        .expect("base configuration was already validated")
    }

    /// The class on the base model of the `G` with `mult_P(z) <= G.z` for
    /// every curve `z` not in the pencil through `P`: a fiber or a line.
    pub fn pencil_class(&self) -> DivisorClass {
        match self.model() {
            BaseModel::P2 => DivisorClass::generator(&self.base_basis, 0),
            BaseModel::Fn(_) => DivisorClass::generator(&self.base_basis, 1),
        }
    }
}

fn check_points(
    base: &Arc<PicardBasis>,
    boundary: &[DivisorClass],
    points: &[BlowUpPoint],
) -> Result<(), SurfaceError> {
    let r = boundary.len();
    let mut crossings: BTreeMap<(usize, usize), i128> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        let bad = |reason: String| SurfaceError::InvalidPoint { point: i, reason };
        if p.on.len() > 2 {
            return Err(bad(format!(
                "lies on {} boundary components, a normal crossing allows at most 2",
                p.on.len()
            )));
        }
        for &j in &p.on {
            if j >= r {
                return Err(bad(format!("refers to missing component {j}")));
            }
        }
        if p.on.len() == 2 {
            let (a, b) = (p.on[0], p.on[1]);
            if a == b {
                return Err(bad("lists the same component twice".into()));
            }
            let meet = boundary[a].intersect(&boundary[b])?;
            let used = crossings.entry((a, b)).or_insert(0);
            *used += 1;
            if int(*used) > meet {
                return Err(bad(format!(
                    "components {a} and {b} meet in only {meet} point(s), all already blown up"
                )));
            }
        }
    }
    // A fiber (line) through grouped points meets component j in G.C_j points.
    let pencil = match base.base_model() {
        BaseModel::P2 => DivisorClass::generator(base, 0),
        BaseModel::Fn(_) => DivisorClass::generator(base, 1),
    };
    let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, p) in points.iter().enumerate() {
        if let Some(g) = p.fiber_group {
            groups.entry(g).or_default().push(i);
        }
    }
    for (g, members) in &groups {
        for (j, c) in boundary.iter().enumerate() {
            let on_j = members.iter().filter(|&&i| points[i].on.contains(&j)).count();
            let room = pencil.intersect(c)?;
            let is_member = c == &pencil;
            if on_j > 0 && (is_member || int(on_j as i128) > room) {
                return Err(SurfaceError::InvalidPoint {
                    point: members[0],
                    reason: format!(
                        "group {g} puts {on_j} point(s) on component {j}, which meets its fiber in {room}"
                    ),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_transforms_drop_by_incidence() {
        let pair = SurfacePair::make_p2(&[2])
            .unwrap()
            .blow_up(&[BlowUpPoint::on(0), BlowUpPoint::on(0), BlowUpPoint::off_boundary()])
            .unwrap();
        let c = &pair.boundary()[0];
        assert_eq!(c.self_intersection(), int(2));
        assert_eq!(c.arithmetic_genus(), int(0));
        assert_eq!(c.to_text(), "2H - E1 - E2");
    }

    #[test]
    fn reducible_classes_are_rejected() {
        assert!(SurfacePair::make_fn(1, &[(2, 0)]).is_err());
        assert!(SurfacePair::make_fn(2, &[(1, 1)]).is_err());
        assert!(SurfacePair::make_fn(0, &[(0, 2)]).is_err());
        assert!(SurfacePair::make_fn(2, &[(1, 0), (1, 0)]).is_err());
        assert!(SurfacePair::make_fn(0, &[(1, 0), (1, 0)]).is_ok());
        assert!(SurfacePair::make_p2(&[0]).is_err());
    }

    #[test]
    fn crossings_are_limited_by_intersection_number() {
        let pair = SurfacePair::make_p2(&[2, 1]).unwrap();
        assert!(pair
            .blow_up(&[BlowUpPoint::crossing(0, 1), BlowUpPoint::crossing(0, 1)])
            .is_ok());
        assert!(pair.blow_up(&vec![BlowUpPoint::crossing(0, 1); 3]).is_err());
        assert!(pair
            .blow_up(&[BlowUpPoint {
                on: vec![0, 1, 2],
                fiber_group: None
            }])
            .is_err());
    }

    #[test]
    fn fiber_groups_respect_boundary_fibers() {
        let pair = SurfacePair::make_fn(0, &[(2, 1), (0, 1)]).unwrap();
        let two = [BlowUpPoint::on(0).in_group(1), BlowUpPoint::on(0).in_group(1)];
        assert!(pair.blow_up(&two).is_ok());
        let three = [
            BlowUpPoint::on(0).in_group(1),
            BlowUpPoint::on(0).in_group(1),
            BlowUpPoint::on(0).in_group(1),
        ];
        assert!(pair.blow_up(&three).is_err());
        assert!(pair.blow_up(&[BlowUpPoint::on(1).in_group(2)]).is_err());
    }

    #[test]
    fn provenance_labels() {
        let p = Provenance {
            family: "II.6A.n.m".into(),
            n: Some(2),
            m: Some(3),
        };
        assert_eq!(p.label(), "II.6A.2.3");
        let q = Provenance {
            family: "I.4B".into(),
            n: None,
            m: None,
        };
        assert_eq!(q.label(), "I.4B");
    }
}
