//! Domains: vertex sets with a designated border edge `a = (0,0)(1,0)` and a
//! partition of the remaining border edges into labelled parts.
//!
//! Two families are provided, both symmetric under the mirror `(p,q) ↦ (p,-q)`:
//!
//! * the trapezoid `X_{r,s} = {(p,q) : 1 ≤ p ≤ r, |q| ≤ 2s + p - 2}`, whose
//!   border splits into `A⁺, B⁺, C, B⁻, A⁻` (left-side horizontals, top
//!   verticals, right-side horizontals and their mirror images);
//! * the slit plane, `Z²` minus the wedge `{p ≤ 0, p - 1 ≤ q ≤ 1 - p}`, whose
//!   border apart from `a` is vertical and splits into `A₁` (above the axis)
//!   and its mirror `A₂`.
//!
//! Each part carries the label `ℓ(ē)` (edge oriented away from the domain)
//! and the winding `r` that every walk from `a` into one of its edges has.
//! Those constants are checked against exhaustive enumeration in the tests
//! of the `identity` module.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{neighbors, Direction, Edge, OrientedEdge, Vertex};
use crate::winding::Winding;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomainError {
    #[error("trapezoid parameters must satisfy r, s >= 2 (got r = {0}, s = {1})")]
    ParameterOutOfRange(i32, i32),
    #[error("{0} is not a border edge of the domain")]
    NotABorderEdge(Edge),
    #[error("cannot parse domain `{0}`: expected `trapezoid:R,S` or `slitplane`")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PartTag {
    /// The start edge `a` itself.
    Start,
    APlus,
    BPlus,
    C,
    BMinus,
    AMinus,
    A1,
    A2,
}

impl fmt::Display for PartTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PartTag::Start => "a",
            PartTag::APlus => "A+",
            PartTag::BPlus => "B+",
            PartTag::C => "C",
            PartTag::BMinus => "B-",
            PartTag::AMinus => "A-",
            PartTag::A1 => "A1",
            PartTag::A2 => "A2",
        };
        f.write_str(s)
    }
}

/// A part of the border together with its `(ℓ, r)` constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartLabel {
    pub tag: PartTag,
    pub expected_l: Direction,
    pub expected_r: Winding,
}

impl PartLabel {
    const fn new(tag: PartTag, l: i64, r: Winding) -> Self {
        Self {
            tag,
            expected_l: Direction::new(l),
            expected_r: r,
        }
    }

    /// The part's image under the mirror: winding negated, label conjugated.
    pub const fn mirrored(self, tag: PartTag) -> Self {
        Self {
            tag,
            expected_l: self.expected_l.conj(),
            expected_r: -self.expected_r,
        }
    }
}

const START: PartLabel = PartLabel::new(PartTag::Start, 3, 0);
const A_PLUS: PartLabel = PartLabel::new(PartTag::APlus, 3, 3);
const B_PLUS: PartLabel = PartLabel::new(PartTag::BPlus, 2, 2);
const C_PART: PartLabel = PartLabel::new(PartTag::C, 0, 0);
const A_ONE: PartLabel = PartLabel::new(PartTag::A1, 4, 4);

/// The start edge shared by every domain here.
pub fn start_edge() -> Edge {
    Edge::between(Vertex::ORIGIN, Vertex::new(1, 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Domain {
    Trapezoid { r: i32, s: i32 },
    SlitPlane,
}

impl Domain {
    pub fn trapezoid(r: i32, s: i32) -> Result<Self, DomainError> {
        if r < 2 || s < 2 {
            return Err(DomainError::ParameterOutOfRange(r, s));
        }
        Ok(Domain::Trapezoid { r, s })
    }

    pub fn slit_plane() -> Self {
        Domain::SlitPlane
    }

    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn start_edge(&self) -> Edge {
        start_edge()
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Domain::Trapezoid { .. })
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        match *self {
            Domain::Trapezoid { r, s } => (1..=r).contains(&v.p) && v.q.abs() <= 2 * s + v.p - 2,
            Domain::SlitPlane => !(v.p <= 0 && v.p - 1 <= v.q && v.q <= 1 - v.p),
        }
    }

    /// Number of vertices of a finite domain.
    pub fn vertex_count(&self) -> Option<usize> {
        match *self {
            Domain::Trapezoid { r, s } => {
                Some((1..=r).map(|p| (2 * (2 * s + p - 2) + 1) as usize).sum())
            }
            Domain::SlitPlane => None,
        }
    }

    pub fn vertices(&self) -> Option<Vec<Vertex>> {
        match *self {
            Domain::Trapezoid { r, s } => Some(
                (1..=r)
                    .flat_map(|p| {
                        let h = 2 * s + p - 2;
                        (-h..=h).map(move |q| Vertex::new(p, q))
                    })
                    .collect(),
            ),
            Domain::SlitPlane => None,
        }
    }

    /// A coordinate box `(pmin, pmax, qmin, qmax)` holding every vertex that
    /// a walk of at most `max_len` steps starting with `a` can reach while
    /// its inner vertices stay in the domain.
    pub fn window(&self, max_len: usize) -> (i32, i32, i32, i32) {
        match *self {
            Domain::Trapezoid { r, s } => {
                let h = 2 * s + r - 1;
                (0, r + 1, -h, h)
            }
            Domain::SlitPlane => {
                let m = max_len as i32 + 1;
                (-m, m, -m, m)
            }
        }
    }

    /// True iff exactly one endvertex of `e` is in the domain.
    pub fn is_border(&self, e: Edge) -> bool {
        let (u, v) = e.endpoints();
        self.contains(u) != self.contains(v)
    }

    /// The part of the border containing `e`, or `None` if `e` is not a
    /// border edge.
    pub fn classify(&self, e: Edge) -> Option<PartLabel> {
        let away = self.oriented_away(e).ok()?;
        if e == start_edge() {
            return Some(START);
        }
        let inside = away.tail;
        let outside = away.head();
        match *self {
            Domain::Trapezoid { r, .. } => {
                if e.is_horizontal() {
                    if outside.p == 0 {
                        Some(if inside.q > 0 {
                            A_PLUS
                        } else {
                            A_PLUS.mirrored(PartTag::AMinus)
                        })
                    } else if outside.p == r + 1 {
                        Some(C_PART)
                    } else {
                        None
                    }
                } else if inside.q > 0 {
                    Some(B_PLUS)
                } else {
                    Some(B_PLUS.mirrored(PartTag::BMinus))
                }
            }
            Domain::SlitPlane => {
                if e.is_horizontal() {
                    None
                } else if inside.q > 0 {
                    Some(A_ONE)
                } else {
                    Some(A_ONE.mirrored(PartTag::A2))
                }
            }
        }
    }

    /// The labels of all parts, start edge first.
    pub fn parts(&self) -> Vec<PartLabel> {
        match self {
            Domain::Trapezoid { .. } => vec![
                START,
                A_PLUS,
                B_PLUS,
                C_PART,
                B_PLUS.mirrored(PartTag::BMinus),
                A_PLUS.mirrored(PartTag::AMinus),
            ],
            Domain::SlitPlane => vec![START, A_ONE, A_ONE.mirrored(PartTag::A2)],
        }
    }

    /// All border edges of a finite domain, or those with both endvertices
    /// within L∞ distance `radius` of the origin for an infinite one.
    pub fn border_edges(&self, radius: i32) -> BTreeSet<Edge> {
        let (pmin, pmax, qmin, qmax) = match self {
            Domain::Trapezoid { .. } => self.window(0),
            Domain::SlitPlane => (-radius, radius, -radius, radius),
        };
        let in_box = |v: Vertex| (pmin..=pmax).contains(&v.p) && (qmin..=qmax).contains(&v.q);
        let mut out = BTreeSet::new();
        for p in pmin..=pmax {
            for q in qmin..=qmax {
                let v = Vertex::new(p, q);
                if !self.contains(v) {
                    continue;
                }
                for u in neighbors(v) {
                    if !self.contains(u) && in_box(u) {
                        out.insert(Edge::between(u, v));
                    }
                }
            }
        }
        out
    }

    /// `e` oriented away from its endvertex inside the domain.
    pub fn oriented_away(&self, e: Edge) -> Result<OrientedEdge, DomainError> {
        let (u, v) = e.endpoints();
        match (self.contains(u), self.contains(v)) {
            (true, false) => Ok(OrientedEdge { edge: e, tail: u }),
            (false, true) => Ok(OrientedEdge { edge: e, tail: v }),
            _ => Err(DomainError::NotABorderEdge(e)),
        }
    }

    /// The exit set `D = B ∪ C ∪ {top edge of A⁺, bottom edge of A⁻}` of a
    /// trapezoid. `None` for the slit plane.
    pub fn exit_edges(&self) -> Option<BTreeSet<Edge>> {
        let Domain::Trapezoid { s, .. } = *self else {
            return None;
        };
        let top = 2 * s - 2;
        let extreme_a = [
            Edge::between(Vertex::new(0, top), Vertex::new(1, top)),
            Edge::between(Vertex::new(0, -top), Vertex::new(1, -top)),
        ];
        Some(
            self.border_edges(0)
                .into_iter()
                .filter(|&e| {
                    let tag = self.classify(e).map(|l| l.tag);
                    matches!(tag, Some(PartTag::BPlus | PartTag::BMinus | PartTag::C))
                        || extreme_a.contains(&e)
                })
                .collect(),
        )
    }

    /// Top, right and bottom sides of a trapezoid: the staircases
    /// `{(p, 2s+p-2), (p, 2s+p-3)}`, the column `p = r` and the mirror
    /// staircase.
    pub fn far_sides(&self) -> Option<BTreeSet<Vertex>> {
        let Domain::Trapezoid { r, s } = *self else {
            return None;
        };
        let mut out = BTreeSet::new();
        for p in 1..=r {
            for q in [2 * s + p - 2, 2 * s + p - 3] {
                out.insert(Vertex::new(p, q));
                out.insert(Vertex::new(p, -q));
            }
        }
        let h = 2 * s + r - 2;
        out.extend((-h..=h).map(|q| Vertex::new(r, q)));
        Some(out)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Trapezoid { r, s } => write!(f, "trapezoid:{r},{s}"),
            Domain::SlitPlane => write!(f, "slitplane"),
        }
    }
}

impl FromStr for Domain {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DomainError::Parse(s.to_string());
        let t = s.trim();
        if t.eq_ignore_ascii_case("slitplane") {
            return Ok(Domain::SlitPlane);
        }
        let rest = t.strip_prefix("trapezoid:").ok_or_else(bad)?;
        let (r, s_) = rest.split_once(',').ok_or_else(bad)?;
        let r: i32 = r.trim().parse().map_err(|_| bad())?;
        let s_: i32 = s_.trim().parse().map_err(|_| bad())?;
        Domain::trapezoid(r, s_)
    }
}
