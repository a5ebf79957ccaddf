//! The families of asymptotically log del Pezzo pairs, with automorphism
//! and Kähler-Einstein edge metadata.

use crate::surface::{BlowUpPoint, Provenance, SurfaceError, SurfacePair};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family}: {reason}")]
    BadParameters { family: String, reason: String },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// A constraint on one integer parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Range {
    Any,
    Exactly(u32),
    AtLeast(u32),
}

impl Range {
    pub fn contains(self, v: u32) -> bool {
        match self {
            Range::Any => true,
            Range::Exactly(x) => v == x,
            Range::AtLeast(x) => v >= x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Condition {
    pub n: Range,
    pub m: Range,
}

impl Condition {
    pub const ALL: Condition = Condition {
        n: Range::Any,
        m: Range::Any,
    };

    pub const fn m(m: Range) -> Self {
        Condition { n: Range::Any, m }
    }

    pub const fn n(n: Range) -> Self {
        Condition { n, m: Range::Any }
    }

    pub const fn nm(n: Range, m: Range) -> Self {
        Condition { n, m }
    }

    pub fn holds(&self, n: Option<u32>, m: Option<u32>) -> bool {
        n.is_none_or(|v| self.n.contains(v)) && m.is_none_or(|v| self.m.contains(v))
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |name: &str, r: Range| match r {
            Range::Any => None,
            Range::Exactly(x) => Some(format!("{name}={x}")),
            Range::AtLeast(x) => Some(format!("{name}>={x}")),
        };
        let parts: Vec<String> = [part("n", self.n), part("m", self.m)].into_iter().flatten().collect();
        if parts.is_empty() {
            write!(f, "all")
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Case<T: 'static> {
    pub when: Condition,
    pub value: T,
}

const fn case<T>(when: Condition, value: T) -> Case<T> {
    Case { when, value }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AutInfo {
    /// Group expression, for the full group or (when `identity_component`)
    /// its identity component.
    pub group: &'static str,
    pub identity_component: bool,
    pub reductive: Option<bool>,
}

const fn aut(group: &'static str, identity_component: bool, reductive: bool) -> AutInfo {
    AutInfo {
        group,
        identity_component,
        reductive: Some(reductive),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum KeeStatus {
    /// Kähler-Einstein edge metrics exist for all small cone angles.
    ExistsSmallBeta,
    /// They exist for no small cone angle.
    NotExistsSmallBeta,
    Open,
}

impl fmt::Display for KeeStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KeeStatus::ExistsSmallBeta => "ExistsSmallBeta",
            KeeStatus::NotExistsSmallBeta => "NotExistsSmallBeta",
            KeeStatus::Open => "Open",
        })
    }
}

/// Why a KEE status is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KeeReason {
    /// The automorphism group is not reductive, which obstructs existence.
    NonReductive,
    /// Log slope instability.
    SlopeUnstable,
    /// Tian's alpha invariant exceeds 2/3 for small weights.
    AlphaBound,
    /// An invariant alpha invariant equals 1 under a finite symmetry group.
    SymmetricAlpha,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KeeInfo {
    pub status: KeeStatus,
    pub reason: KeeReason,
}

const fn kee(status: KeeStatus, reason: KeeReason) -> KeeInfo {
    KeeInfo { status, reason }
}

const OPEN: KeeInfo = kee(KeeStatus::Open, KeeReason::Unknown);
const NONRED: KeeInfo = kee(KeeStatus::NotExistsSmallBeta, KeeReason::NonReductive);

/// How the base configuration is described.
#[derive(Debug, Clone, Copy)]
pub enum BaseShape {
    /// Curves of the given degrees in `P^2`.
    P2(&'static [u32]),
    /// Curves `aZ + bF` on `F_n`; `n` is fixed or a family parameter.
    Fn {
        n: Option<u32>,
        classes: fn(u32) -> Vec<(i128, i128)>,
    },
}

/// Points blown up on a base family.
#[derive(Debug, Clone, Copy)]
pub struct BlowUpRule {
    pub base: &'static str,
    /// Components the points may lie on, in round-robin order.
    pub on: &'static [usize],
    /// Maximum number of points per listed component.
    pub caps: &'static [Option<u32>],
    pub m_max: Option<u32>,
}

#[derive(Debug, Clone, Copy)]
pub struct Family {
    pub id: &'static str,
    pub description: &'static str,
    pub shape: Shape,
    pub aut: &'static [Case<AutInfo>],
    pub kee: &'static [Case<KeeInfo>],
    pub alpha_notes: &'static [Case<&'static str>],
}

#[derive(Debug, Clone, Copy)]
pub enum Shape {
    Base(BaseShape),
    BlownUp(BlowUpRule),
}

use KeeReason as R;
use KeeStatus as K;
use Range::{AtLeast, Exactly};

const fn base_p2(deg: &'static [u32]) -> Shape {
    Shape::Base(BaseShape::P2(deg))
}

const fn base_fn(n: Option<u32>, classes: fn(u32) -> Vec<(i128, i128)>) -> Shape {
    Shape::Base(BaseShape::Fn { n, classes })
}

const fn blown(base: &'static str, on: &'static [usize], caps: &'static [Option<u32>], m_max: Option<u32>) -> Shape {
    Shape::BlownUp(BlowUpRule { base, on, caps, m_max })
}

fn nn(n: u32) -> i128 {
    n as i128
}

const ALL: Condition = Condition::ALL;
const NONE_AUT: &[Case<AutInfo>] = &[];
const OPEN_KEE: &[Case<KeeInfo>] = &[case(ALL, OPEN)];
const NO_NOTES: &[Case<&str>] = &[];
const ELLIPTIC_NOTE: &[Case<&str>] = &[case(
    ALL,
    "alpha >= min{1, 1/(9 beta)}; limit 1 as beta -> 0",
)];

static FAMILIES: &[Family] = &[
    Family {
        id: "I.1A",
        description: "P2 with a smooth cubic",
        shape: base_p2(&[3]),
        aut: &[case(ALL, aut("finite", false, true))],
        kee: &[case(ALL, kee(K::ExistsSmallBeta, R::AlphaBound))],
        alpha_notes: ELLIPTIC_NOTE,
    },
    Family {
        id: "I.1B",
        description: "P2 with a smooth conic",
        shape: base_p2(&[2]),
        aut: &[case(ALL, aut("PGL_2", false, true))],
        kee: &[case(ALL, kee(K::NotExistsSmallBeta, R::SlopeUnstable))],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.1C",
        description: "P2 with a line",
        shape: base_p2(&[1]),
        aut: &[case(ALL, aut("G_a^2 ⋊ GL_2", false, false))],
        kee: &[case(ALL, NONRED)],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.2.n",
        description: "F_n with the negative section",
        shape: base_fn(None, |_| vec![(1, 0)]),
        aut: &[
            case(Condition::n(Exactly(0)), aut("PGL_2 × (G_a ⋊ G_m)", false, false)),
            case(Condition::n(AtLeast(1)), aut("G_a^{n+1} ⋊ (GL_2/μ_n)", false, false)),
        ],
        kee: &[case(ALL, NONRED)],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.3A",
        description: "F_1 with a smooth curve in |2Z + 2F|",
        shape: base_fn(Some(1), |_| vec![(2, 2)]),
        aut: &[case(ALL, aut("G_m", true, true))],
        kee: &[case(ALL, kee(K::ExistsSmallBeta, R::SymmetricAlpha))],
        alpha_notes: &[case(ALL, "alpha_G = 1 for all beta in (0, 1] for a finite symmetry group G")],
    },
    Family {
        id: "I.3B",
        description: "F_1 with a smooth curve in |Z + F|",
        shape: base_fn(Some(1), |_| vec![(1, 1)]),
        aut: &[case(ALL, aut("GL_2", false, true))],
        kee: &[case(ALL, kee(K::NotExistsSmallBeta, R::SlopeUnstable))],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.4A",
        description: "P1 × P1 with a smooth (2,2)-curve",
        shape: base_fn(Some(0), |_| vec![(2, 2)]),
        aut: &[case(ALL, aut("finite", false, true))],
        kee: &[case(ALL, kee(K::ExistsSmallBeta, R::AlphaBound))],
        alpha_notes: ELLIPTIC_NOTE,
    },
    Family {
        id: "I.4B",
        description: "P1 × P1 with a smooth (2,1)-curve",
        shape: base_fn(Some(0), |_| vec![(2, 1)]),
        aut: &[case(ALL, AutInfo {
            group: "trivial or G_m",
            identity_component: true,
            reductive: Some(true),
        })],
        kee: &[case(ALL, kee(K::ExistsSmallBeta, R::SymmetricAlpha))],
        alpha_notes: &[case(ALL, "alpha_G = 1 for all beta in (0, 1] for a finite symmetry group G")],
    },
    Family {
        id: "I.4C",
        description: "P1 × P1 with a smooth (1,1)-curve",
        shape: base_fn(Some(0), |_| vec![(1, 1)]),
        aut: &[case(ALL, aut("PGL_2", true, true))],
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.5.m",
        description: "blow-up of I.1A at m <= 8 points of the cubic",
        shape: blown("I.1A", &[0], &[None], Some(8)),
        aut: &[case(ALL, aut("finite", false, true))],
        kee: &[case(ALL, kee(K::ExistsSmallBeta, R::AlphaBound))],
        alpha_notes: ELLIPTIC_NOTE,
    },
    Family {
        id: "I.6B.m",
        description: "blow-up of I.1B at m points of the conic",
        shape: blown("I.1B", &[0], &[None], None),
        aut: &[
            case(Condition::m(Exactly(1)), aut("G_a ⋊ G_m^2", false, false)),
            case(Condition::m(Exactly(2)), aut("G_m", true, true)),
            case(Condition::m(AtLeast(3)), aut("finite", false, true)),
        ],
        kee: &[case(Condition::m(Exactly(1)), NONRED), case(Condition::m(AtLeast(2)), OPEN)],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.6C.m",
        description: "blow-up of I.1C at m points of the line",
        shape: blown("I.1C", &[0], &[None], None),
        aut: &[
            case(Condition::m(Exactly(1)), aut("G_a^2 ⋊ (G_a ⋊ G_m^2)", false, false)),
            case(Condition::m(Exactly(2)), aut("G_a^2 ⋊ G_m^2", true, false)),
            case(Condition::m(AtLeast(3)), aut("G_a^2 ⋊ G_m", true, false)),
        ],
        kee: &[case(ALL, NONRED)],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.7.n.m",
        description: "blow-up of I.2.n at m points of the negative section",
        shape: blown("I.2.n", &[0], &[None], None),
        aut: &[
            case(Condition::nm(Exactly(0), Exactly(1)), aut("(G_a ⋊ G_m) × (G_a ⋊ G_m)", false, false)),
            case(Condition::nm(Exactly(0), Exactly(2)), aut("G_m × (G_a ⋊ G_m)", true, false)),
            case(Condition::nm(Exactly(0), AtLeast(3)), aut("G_a ⋊ G_m", true, false)),
            case(Condition::nm(Exactly(1), Exactly(1)), aut("G_a^2 ⋊ (G_a ⋊ G_m^2)", false, false)),
            case(Condition::nm(Exactly(1), Exactly(2)), aut("G_a^2 ⋊ G_m^2", true, false)),
            case(Condition::nm(Exactly(1), AtLeast(3)), aut("G_a^2 ⋊ G_m", true, false)),
            case(Condition::nm(AtLeast(2), Exactly(1)), aut("G_a^{n+1} ⋊ ((G_a ⋊ G_m^2)/μ_n)", false, false)),
            case(Condition::nm(AtLeast(2), Exactly(2)), aut("G_a^{n+1} ⋊ G_m^2/μ_n", true, false)),
            case(Condition::nm(AtLeast(2), AtLeast(3)), aut("G_a^{n+1} ⋊ G_m/μ_n", true, false)),
        ],
        kee: &[case(ALL, NONRED)],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.8B.m",
        description: "blow-up of I.3B at m points of the boundary curve",
        shape: blown("I.3B", &[0], &[None], None),
        aut: &[
            case(Condition::m(Exactly(1)), aut("G_a ⋊ G_m^2", false, false)),
            case(Condition::m(Exactly(2)), aut("G_m^2", true, true)),
            case(Condition::m(AtLeast(3)), aut("G_m", true, true)),
        ],
        kee: &[case(Condition::m(Exactly(1)), NONRED), case(Condition::m(AtLeast(2)), OPEN)],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "I.9B.m",
        description: "blow-up of I.4B at m points of the curve, no two on one (0,1)-curve",
        shape: blown("I.4B", &[0], &[None], None),
        aut: &[case(ALL, AutInfo {
            group: "trivial or G_m",
            identity_component: true,
            reductive: Some(true),
        })],
        kee: &[
            case(Condition::m(Exactly(5)), kee(K::ExistsSmallBeta, R::SymmetricAlpha)),
            case(ALL, OPEN),
        ],
        alpha_notes: &[
            case(Condition::m(Exactly(5)), "cubic surface with a line; alpha = (1+beta)/(2+beta) at an Eckardt point; alpha_G = 1 on the Clebsch cubic"),
        ],
    },
    Family {
        id: "I.9C.m",
        description: "blow-up of I.4C at m points of the curve",
        shape: blown("I.4C", &[0], &[None], None),
        aut: &[
            case(Condition::m(Exactly(1)), aut("G_a ⋊ G_m", true, false)),
            case(Condition::m(Exactly(2)), aut("G_m", true, true)),
            case(Condition::m(AtLeast(3)), aut("finite", false, true)),
        ],
        kee: &[case(Condition::m(Exactly(1)), NONRED), case(Condition::m(AtLeast(2)), OPEN)],
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.1A",
        description: "P2 with a conic and a line",
        shape: base_p2(&[2, 1]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.1B",
        description: "P2 with two lines",
        shape: base_p2(&[1, 1]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.2A.n",
        description: "F_n with Z and a disjoint section in |Z + nF|",
        shape: base_fn(None, |n| vec![(1, 0), (1, nn(n))]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.2B.n",
        description: "F_n with Z and a section in |Z + (n+1)F|",
        shape: base_fn(None, |n| vec![(1, 0), (1, nn(n) + 1)]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.2C.n",
        description: "F_n with Z and a fiber",
        shape: base_fn(None, |_| vec![(1, 0), (0, 1)]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.3",
        description: "F_1 with two curves in |Z + F|",
        shape: base_fn(Some(1), |_| vec![(1, 1), (1, 1)]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.4A",
        description: "P1 × P1 with two (1,1)-curves",
        shape: base_fn(Some(0), |_| vec![(1, 1), (1, 1)]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.4B",
        description: "P1 × P1 with a (2,1)-curve and a (0,1)-curve",
        shape: base_fn(Some(0), |_| vec![(2, 1), (0, 1)]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.5A.m",
        description: "blow-up of II.1A at m <= 5 points, at most four on the conic and one on the line",
        shape: blown("II.1A", &[0, 1], &[Some(4), Some(1)], Some(5)),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.5B.m",
        description: "blow-up of II.1B at m points of the lines away from their crossing",
        shape: blown("II.1B", &[0, 1], &[None, None], None),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.6A.n.m",
        description: "blow-up of II.2A.n at m points of the boundary, at most one per fiber",
        shape: blown("II.2A.n", &[0, 1], &[None, None], None),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.6B.n.m",
        description: "blow-up of II.2B.n at m smooth boundary points, at most one per fiber",
        shape: blown("II.2B.n", &[0, 1], &[None, None], None),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.6C.n.m",
        description: "blow-up of II.2C.n at m smooth boundary points",
        shape: blown("II.2C.n", &[0, 1], &[None, None], None),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.7.m",
        description: "blow-up of II.3 at m smooth boundary points, at most one per fiber",
        shape: blown("II.3", &[0, 1], &[None, None], None),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "II.8.m",
        description: "blow-up of II.4B at m <= 4 points of the (2,1)-curve away from the crossings",
        shape: blown("II.4B", &[0], &[None], Some(4)),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "III.1",
        description: "P2 with three lines in general position",
        shape: base_p2(&[1, 1, 1]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: &[case(ALL, "toric: alpha = max(beta_i)/sum(beta_i)")],
    },
    Family {
        id: "III.2",
        description: "P1 × P1 with a (1,1)-curve, a (0,1)-curve and a (1,0)-curve",
        shape: base_fn(Some(0), |_| vec![(1, 1), (0, 1), (1, 0)]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "III.3.n",
        description: "F_n with Z, a fiber and a section in |Z + nF|",
        shape: base_fn(None, |n| vec![(1, 0), (0, 1), (1, nn(n))]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "III.4.m",
        description: "blow-up of III.1 at m <= 3 points, at most one per line, off the crossings",
        shape: blown("III.1", &[0, 1, 2], &[Some(1), Some(1), Some(1)], Some(3)),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "III.5.n.m",
        description: "blow-up of III.3.n at m smooth points of the two sections",
        shape: blown("III.3.n", &[0, 2], &[None, None], None),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: NO_NOTES,
    },
    Family {
        id: "IV",
        description: "P1 × P1 with two (1,0)-curves and two (0,1)-curves",
        shape: base_fn(Some(0), |_| vec![(1, 0), (1, 0), (0, 1), (0, 1)]),
        aut: NONE_AUT,
        kee: OPEN_KEE,
        alpha_notes: &[case(ALL, "toric")],
    },
];

/// Every catalogued family in listing order.
pub fn families() -> &'static [Family] {
    FAMILIES
}

pub fn family(id: &str) -> Result<&'static Family, CatalogError> {
    FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| CatalogError::UnknownFamily(id.to_string()))
}

/// Resolves a family id or an instance label such as `II.6A.2.3`
/// (family `II.6A.n.m` with `n = 2`, `m = 3`) to a family and parameters.
pub fn resolve(label: &str) -> Result<(&'static Family, Option<u32>, Option<u32>), CatalogError> {
    if let Ok(f) = family(label) {
        return Ok((f, None, None));
    }
    for f in FAMILIES {
        let slots: Vec<&str> = f.id.split('.').rev().take_while(|p| *p == "n" || *p == "m").collect();
        if slots.is_empty() {
            continue;
        }
        let stem = f.id.rsplitn(slots.len() + 1, '.').last().expect("id has a stem");
        let Some(rest) = label.strip_prefix(stem).and_then(|r| r.strip_prefix('.')) else { continue };
        let values: Vec<&str> = rest.split('.').collect();
        if values.len() != slots.len() {
            continue;
        }
        let Ok(nums) = values.iter().map(|v| v.parse::<u32>()).collect::<Result<Vec<_>, _>>() else { continue };
        let mut n = None;
        let mut m = None;
        for (slot, v) in slots.iter().rev().zip(nums) {
            if *slot == "n" {
                n = Some(v);
            } else {
                m = Some(v);
            }
        }
        return Ok((f, n, m));
    }
    Err(CatalogError::UnknownFamily(label.to_string()))
}

/// The maximum number of boundary components over the catalog.
pub fn boundary_component_bound() -> usize {
    4
}

impl Family {
    fn base_shape(&self) -> BaseShape {
        match self.shape {
            Shape::Base(b) => b,
            Shape::BlownUp(rule) => family(rule.base).expect("catalog bases exist").base_shape(),
        }
    }

    pub fn takes_n(&self) -> bool {
        matches!(self.base_shape(), BaseShape::Fn { n: None, .. })
    }

    pub fn takes_m(&self) -> bool {
        matches!(self.shape, Shape::BlownUp(_))
    }

    pub fn blow_up_rule(&self) -> Option<&BlowUpRule> {
        match &self.shape {
            Shape::BlownUp(rule) => Some(rule),
            Shape::Base(_) => None,
        }
    }

    /// Number of boundary components.
    pub fn components(&self) -> usize {
        match self.base_shape() {
            BaseShape::P2(d) => d.len(),
            BaseShape::Fn { classes, .. } => classes(0).len(),
        }
    }

    /// Largest admissible `m`, if bounded.
    pub fn m_max(&self) -> Option<u32> {
        self.blow_up_rule().and_then(|r| r.m_max)
    }

    pub fn domain_text(&self) -> String {
        let mut parts = Vec::new();
        if self.takes_n() {
            parts.push("n >= 0".to_string());
        }
        if let Some(rule) = self.blow_up_rule() {
            parts.push(match rule.m_max {
                Some(k) => format!("1 <= m <= {k}"),
                None => "m >= 1".to_string(),
            });
        }
        if parts.is_empty() {
            "none".into()
        } else {
            parts.join(", ")
        }
    }

    fn check_params(&self, n: Option<u32>, m: Option<u32>) -> Result<(), CatalogError> {
        let bad = |reason: String| CatalogError::BadParameters {
            family: self.id.to_string(),
            reason,
        };
        match (self.takes_n(), n) {
            (true, None) => return Err(bad("needs --n".into())),
            (false, Some(_)) => return Err(bad("takes no n".into())),
            _ => {}
        }
        match (self.takes_m(), m) {
            (true, None) => return Err(bad("needs --m".into())),
            (false, Some(_)) => return Err(bad("takes no m".into())),
            (true, Some(0)) => return Err(bad("m must be at least 1".into())),
            (true, Some(k)) => {
                if let Some(top) = self.m_max() {
                    if k > top {
                        return Err(bad(format!("m = {k} exceeds {top}")));
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn provenance(&self, n: Option<u32>, m: Option<u32>) -> Provenance {
        Provenance {
            family: self.id.to_string(),
            n,
            m,
        }
    }

    fn build_base(&self, n: Option<u32>) -> Result<SurfacePair, CatalogError> {
        Ok(match self.base_shape() {
            BaseShape::P2(degrees) => SurfacePair::make_p2(degrees)?,
            BaseShape::Fn { n: fixed, classes } => {
                let n = fixed.or(n).unwrap_or(0);
                SurfacePair::make_fn(n, &classes(n))?
            }
        })
    }

    /// Default placement: points go round-robin over the allowed components,
    /// skipping full ones, each on its own fiber.
    pub fn default_counts(&self, m: u32) -> Vec<u32> {
        let Some(rule) = self.blow_up_rule() else { return vec![] };
        let mut counts = vec![0u32; rule.on.len()];
        let mut slot = 0;
        for _ in 0..m {
            for _ in 0..rule.on.len() {
                let k = slot % rule.on.len();
                slot += 1;
                if rule.caps[k].is_none_or(|c| counts[k] < c) {
                    counts[k] += 1;
                    break;
                }
            }
        }
        counts
    }

    pub fn instantiate(&self, n: Option<u32>, m: Option<u32>) -> Result<SurfacePair, CatalogError> {
        let counts = m.map(|m| self.default_counts(m)).unwrap_or_default();
        self.instantiate_with_placement(n, m, &counts)
    }

    /// `counts[k]` points on the `k`-th allowed component of the blow-up rule.
    pub fn instantiate_with_placement(
        &self,
        n: Option<u32>,
        m: Option<u32>,
        counts: &[u32],
    ) -> Result<SurfacePair, CatalogError> {
        self.check_params(n, m)?;
        let base = self.build_base(n)?;
        let pair = match self.blow_up_rule() {
            None => base,
            Some(rule) => {
                let bad = |reason: String| CatalogError::BadParameters {
                    family: self.id.to_string(),
                    reason,
                };
                if counts.len() != rule.on.len() {
                    return Err(bad(format!("placement needs {} counts", rule.on.len())));
                }
                if counts.iter().sum::<u32>() != m.unwrap_or(0) {
                    return Err(bad("placement counts do not add up to m".into()));
                }
                let mut points = Vec::new();
                for (k, (&comp, &c)) in rule.on.iter().zip(counts).enumerate() {
                    if let Some(cap) = rule.caps[k] {
                        if c > cap {
                            return Err(bad(format!("at most {cap} point(s) on C{}", comp + 1)));
                        }
                    }
                    points.extend((0..c).map(|_| BlowUpPoint::on(comp)));
                }
                base.blow_up(&points)?
            }
        };
        Ok(pair.with_provenance(self.provenance(n, m)))
    }

    fn pick<T: Copy>(cases: &'static [Case<T>], n: Option<u32>, m: Option<u32>) -> Option<T> {
        cases.iter().find(|c| c.when.holds(n, m)).map(|c| c.value)
    }

    pub fn aut_at(&self, n: Option<u32>, m: Option<u32>) -> Option<AutInfo> {
        Self::pick(self.aut, n, m)
    }

    pub fn kee_at(&self, n: Option<u32>, m: Option<u32>) -> KeeInfo {
        Self::pick(self.kee, n, m).unwrap_or(OPEN)
    }

    pub fn alpha_note_at(&self, n: Option<u32>, m: Option<u32>) -> Option<&'static str> {
        Self::pick(self.alpha_notes, n, m)
    }
}

/// Finds the catalog family of a pair with no blown-up points.
///
/// Boundaries are compared as multisets of classes; on `F_0` the two rulings
/// may be swapped.
pub fn identify_base(pair: &SurfacePair) -> Option<Provenance> {
    use crate::lattice::BaseModel;
    if !pair.points().is_empty() {
        return None;
    }
    let key = |classes: Vec<Vec<i128>>| {
        let mut c = classes;
        c.sort();
        c
    };
    let ours: Vec<Vec<i128>> = pair
        .base_boundary()
        .iter()
        .map(|c| c.coords().iter().map(|q| *q.numer()).collect())
        .collect();
    let mut candidates = vec![key(ours.clone())];
    if pair.model() == BaseModel::Fn(0) {
        candidates.push(key(ours.iter().map(|v| vec![v[1], v[0]]).collect()));
    }
    for fam in FAMILIES {
        let Shape::Base(shape) = fam.shape else { continue };
        let (theirs, n) = match (shape, pair.model()) {
            (BaseShape::P2(d), BaseModel::P2) => (d.iter().map(|&x| vec![x as i128]).collect(), None),
            (BaseShape::Fn { n: fixed, classes }, BaseModel::Fn(k)) => {
                if fixed.is_some_and(|f| f != k) {
                    continue;
                }
                let cls: Vec<Vec<i128>> = classes(k).into_iter().map(|(a, b)| vec![a, b]).collect();
                (cls, if fixed.is_none() { Some(k) } else { None })
            }
            _ => continue,
        };
        if candidates.contains(&key(theirs)) {
            return Some(fam.provenance(n, None));
        }
    }
    None
}
