use super::SurfacePair;
use crate::rational::int;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Severity {
    /// The pair cannot be handled at all.
    Fatal,
    /// A hypothesis of the classification fails; the verifier will decide.
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DiagnosticKind {
    NestedBlowUp,
    PointAtCrossing,
    SharedFiber,
    ComponentsMeetTwice,
    BranchVertex,
    BoundaryCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub message: String,
}

/// Intersection graph of the boundary proper transforms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub vertices: usize,
    /// `(i, j, C_i.C_j)` for `i < j` with positive intersection.
    pub edges: Vec<(usize, usize, i128)>,
}

impl DualGraph {
    /// Number of distinct neighbours of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(a, b, _)| *a == v || *b == v).count()
    }

    pub fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(a, b, _) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..self.vertices).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Counting a double intersection as a 2-cycle.
    pub fn has_cycle(&self) -> bool {
        let total: i128 = self.edges.iter().map(|e| e.2).sum();
        total as usize + self.connected_components() > self.vertices
    }

    /// Disjoint union of chains, every intersection a single point.
    pub fn is_chains(&self) -> bool {
        !self.has_cycle() && (0..self.vertices).all(|v| self.degree(v) <= 2)
    }

    /// A single cycle through every component (length 2 allowed as a double point).
    pub fn is_cycle(&self) -> bool {
        if self.vertices < 2 || self.connected_components() != 1 {
            return false;
        }
        if self.vertices == 2 {
            return self.edges.len() == 1 && self.edges[0].2 == 2;
        }
        self.edges.len() == self.vertices
            && self.edges.iter().all(|e| e.2 == 1)
            && (0..self.vertices).all(|v| self.degree(v) == 2)
    }
}

pub fn dual_graph(pair: &SurfacePair) -> DualGraph {
    let c = pair.boundary();
    let mut edges = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let k = c[i].intersect(&c[j]).expect("same lattice");
            if k > int(0) {
                edges.push((i, j, *k.numer()));
            }
        }
    }
    DualGraph {
        vertices: c.len(),
        edges,
    }
}

/// Checks the hypotheses the classification assumes. Never fails; the
/// verifier only refuses pairs with fatal diagnostics.
pub fn validate_configuration(pair: &SurfacePair) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let warn = |kind, message: String| Diagnostic {
        severity: Severity::Warning,
        kind,
        message,
    };
    if pair.basis().depth() > 1 {
        out.push(Diagnostic {
            severity: Severity::Fatal,
            kind: DiagnosticKind::NestedBlowUp,
            message: format!("{} blows up infinitely near points", pair.basis()),
        });
    }
    for (i, p) in pair.points().iter().enumerate() {
        if p.at_crossing() {
            out.push(warn(
                DiagnosticKind::PointAtCrossing,
                format!(
                    "P{} is a crossing of C{} and C{}, not a smooth point of the boundary",
                    i + 1,
                    p.on[0] + 1,
                    p.on[1] + 1
                ),
            ));
        }
    }
    for (g, members) in pair.fiber_groups() {
        if members.len() >= 2 {
            let names: Vec<String> = members.iter().map(|i| format!("P{}", i + 1)).collect();
            out.push(warn(
                DiagnosticKind::SharedFiber,
                format!(
                    "genericity violated: {} share the fiber of group {g}",
                    names.join(", ")
                ),
            ));
        }
    }
    let graph = dual_graph(pair);
    for &(a, b, k) in &graph.edges {
        if k >= 2 {
            out.push(warn(
                DiagnosticKind::ComponentsMeetTwice,
                format!("C{} and C{} meet in {k} points", a + 1, b + 1),
            ));
        }
    }
    for v in 0..graph.vertices {
        if graph.degree(v) >= 3 {
            out.push(warn(
                DiagnosticKind::BranchVertex,
                format!("C{} meets {} other components", v + 1, graph.degree(v)),
            ));
        }
    }
    if graph.has_cycle() && pair.boundary_sum() != -&pair.canonical() {
        out.push(warn(
            DiagnosticKind::BoundaryCycle,
            "boundary contains a cycle but is not anticanonical".into(),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::BlowUpPoint;

    #[test]
    fn triangle_and_pairs() {
        let tri = SurfacePair::make_p2(&[1, 1, 1]).unwrap();
        let g = dual_graph(&tri);
        assert!(g.is_cycle() && !g.is_chains());
        assert!(validate_configuration(&tri).is_empty());
        let conic_line = dual_graph(&SurfacePair::make_p2(&[2, 1]).unwrap());
        assert!(conic_line.is_cycle());
        let disjoint = dual_graph(&SurfacePair::make_fn(2, &[(1, 0), (1, 2)]).unwrap());
        assert_eq!(disjoint.connected_components(), 2);
        assert!(disjoint.is_chains());
    }

    #[test]
    fn reports_genericity_failures() {
        let pair = SurfacePair::make_fn(0, &[(2, 1)])
            .unwrap()
            .blow_up(&[BlowUpPoint::on(0).in_group(1), BlowUpPoint::on(0).in_group(1)])
            .unwrap();
        let d = validate_configuration(&pair);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].kind, DiagnosticKind::SharedFiber);
        assert!(d[0].message.contains("genericity violated"));

        let star = SurfacePair::make_fn(0, &[(1, 0), (0, 1), (0, 1), (0, 1)]).unwrap();
        let d = validate_configuration(&star);
        assert!(d.iter().any(|x| x.kind == DiagnosticKind::BranchVertex));
    }
}
