//! The hexagonal graph drawn as a brick wall inside the square lattice.
//!
//! Every point of `Z × Z` is a vertex. All vertical unit segments are edges;
//! a horizontal unit segment is an edge only when its left endvertex `(p, q)`
//! has `p ≡ q (mod 2)`. The result is a cubic graph whose faces are 2 × 1
//! rectangles, i.e. hexagons with two degenerate corners.
//!
//! Oriented edges carry a direction label `ζ^k` with `ζ = exp(2πi/6)`,
//! stored here as the exponent `k` in [`Direction`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("{0} and {1} are not joined by an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("{vertex} is not an endvertex of {edge}")]
    NotAnEndvertex { edge: Edge, vertex: Vertex },
    #[error("walk is empty or has a single vertex")]
    TooShort,
    #[error("walk backtracks along {0} at step {1}")]
    Backtrack(Edge, usize),
}

/// A point of the integer lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Vertex {
    pub p: i32,
    pub q: i32,
}

impl Vertex {
    pub const ORIGIN: Vertex = Vertex { p: 0, q: 0 };

    pub const fn new(p: i32, q: i32) -> Self {
        Self { p, q }
    }

    /// True when the horizontal edge at this vertex goes to the right.
    #[inline]
    pub fn opens_right(self) -> bool {
        (self.p + self.q).rem_euclid(2) == 0
    }

    /// The horizontal neighbour, left or right depending on parity.
    #[inline]
    pub fn horizontal_neighbor(self) -> Vertex {
        if self.opens_right() {
            Vertex::new(self.p + 1, self.q)
        } else {
            Vertex::new(self.p - 1, self.q)
        }
    }

    /// Reflection in the x-axis.
    #[inline]
    pub fn mirror(self) -> Vertex {
        Vertex::new(self.p, -self.q)
    }
}

impl From<(i32, i32)> for Vertex {
    fn from((p, q): (i32, i32)) -> Self {
        Vertex::new(p, q)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// An exponent `k` standing for the sixth root of unity `ζ^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Direction(u8);

impl Direction {
    pub const fn new(k: i64) -> Self {
        Direction(k.rem_euclid(6) as u8)
    }

    pub const fn exponent(self) -> u8 {
        self.0
    }

    /// The label of the same edge traversed the other way (`ζ^3 = -1`).
    #[inline]
    pub const fn reversed(self) -> Self {
        Direction((self.0 + 3) % 6)
    }

    #[inline]
    pub const fn shift(self, by: i64) -> Self {
        Direction::new(self.0 as i64 + by)
    }

    /// Complex conjugate, `ζ^k ↦ ζ^{-k}`.
    #[inline]
    pub const fn conj(self) -> Self {
        Direction::new(-(self.0 as i64))
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ^{}", self.0)
    }
}

/// An unordered edge of the hexagonal graph. The endvertices are stored in
/// increasing order so that equal edges compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Result<Self, LatticeError> {
        if edge_exists(u, v) {
            Ok(Self::between(u, v))
        } else {
            Err(LatticeError::NotAnEdge(u, v))
        }
    }

    /// Builds the edge without checking adjacency.
    #[inline]
    pub(crate) fn between(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge { u, v }
        } else {
            Edge { u: v, v: u }
        }
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn is_horizontal(self) -> bool {
        self.u.q == self.v.q
    }

    pub fn contains(self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }

    /// The endvertex other than `w`.
    pub fn other(self, w: Vertex) -> Result<Vertex, LatticeError> {
        if w == self.u {
            Ok(self.v)
        } else if w == self.v {
            Ok(self.u)
        } else {
            Err(LatticeError::NotAnEndvertex {
                edge: self,
                vertex: w,
            })
        }
    }

    pub fn mirror(self) -> Edge {
        Edge::between(self.u.mirror(), self.v.mirror())
    }

    /// Exponent of the basic direction `ℓ_b`: left-to-right horizontals are
    /// `ζ^0`, bottom-up verticals `ζ^1` or `ζ^2` according to whether the
    /// top vertex opens to the right or the left.
    pub fn basic_direction(self) -> Direction {
        if self.is_horizontal() {
            Direction::new(0)
        } else {
            let top = if self.u.q > self.v.q { self.u } else { self.v };
            Direction::new(if top.opens_right() { 1 } else { 2 })
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// An edge oriented away from `tail`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrientedEdge {
    pub edge: Edge,
    pub tail: Vertex,
}

impl OrientedEdge {
    pub fn new(edge: Edge, tail: Vertex) -> Result<Self, LatticeError> {
        edge.other(tail)?;
        Ok(Self { edge, tail })
    }

    pub fn head(self) -> Vertex {
        // tail is an endvertex by construction
        self.edge.other(self.tail).unwrap()
    }

    pub fn direction(self) -> Direction {
        step_direction(self.tail, self.head())
    }
}

/// True iff `u` and `v` are adjacent in the hexagonal graph.
pub fn edge_exists(u: Vertex, v: Vertex) -> bool {
    let (dp, dq) = (v.p - u.p, v.q - u.q);
    match (dp, dq) {
        (0, 1) | (0, -1) => true,
        (1, 0) => u.opens_right(),
        (-1, 0) => v.opens_right(),
        _ => false,
    }
}

/// The three neighbours of `v`: horizontal, up, down.
#[inline]
pub fn neighbors(v: Vertex) -> [Vertex; 3] {
    [
        v.horizontal_neighbor(),
        Vertex::new(v.p, v.q + 1),
        Vertex::new(v.p, v.q - 1),
    ]
}

/// Direction label of the step `from → to` between adjacent vertices.
///
/// This is the hot-path version of [`ell_traversed`]; adjacency is only
/// checked in debug builds.
#[inline]
pub fn step_direction(from: Vertex, to: Vertex) -> Direction {
    debug_assert!(edge_exists(from, to), "{from} -> {to} is not a step");
    if to.q == from.q {
        Direction::new(if to.p > from.p { 0 } else { 3 })
    } else if to.q > from.q {
        Direction::new(if to.opens_right() { 1 } else { 2 })
    } else {
        Direction::new(if from.opens_right() { 4 } else { 5 })
    }
}

/// `ℓ(e, from)`: the label of `e` traversed away from `from`.
pub fn ell_traversed(e: Edge, from: Vertex) -> Result<Direction, LatticeError> {
    let to = e.other(from)?;
    if !edge_exists(from, to) {
        return Err(LatticeError::NotAnEdge(from, to));
    }
    let basic = e.basic_direction();
    let forward = if e.is_horizontal() {
        to.p > from.p
    } else {
        to.q > from.q
    };
    Ok(if forward { basic } else { basic.reversed() })
}

/// A non-backtracking walk, stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Walk {
    vertices: Vec<Vertex>,
}

impl Walk {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self, LatticeError> {
        if vertices.len() < 2 {
            return Err(LatticeError::TooShort);
        }
        for pair in vertices.windows(2) {
            if !edge_exists(pair[0], pair[1]) {
                return Err(LatticeError::NotAnEdge(pair[0], pair[1]));
            }
        }
        for (i, triple) in vertices.windows(3).enumerate() {
            if triple[0] == triple[2] {
                return Err(LatticeError::Backtrack(
                    Edge::between(triple[0], triple[1]),
                    i + 1,
                ));
            }
        }
        Ok(Self { vertices })
    }

    pub fn from_coords(coords: &[(i32, i32)]) -> Result<Self, LatticeError> {
        Self::new(coords.iter().copied().map(Vertex::from).collect())
    }

    pub(crate) fn from_vertices_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(Self::new(vertices.clone()).is_ok());
        Self { vertices }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::between(w[0], w[1]))
    }

    pub fn first_edge(&self) -> Edge {
        Edge::between(self.vertices[0], self.vertices[1])
    }

    pub fn final_edge(&self) -> Edge {
        let n = self.vertices.len();
        Edge::between(self.vertices[n - 2], self.vertices[n - 1])
    }

    /// Natural-orientation labels of the steps, in order.
    pub fn step_directions(&self) -> impl Iterator<Item = Direction> + '_ {
        self.vertices.windows(2).map(|w| step_direction(w[0], w[1]))
    }

    pub fn reverse(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }

    pub fn mirror(&self) -> Walk {
        Walk {
            vertices: self.vertices.iter().map(|v| v.mirror()).collect(),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    /// All vertices distinct.
    pub fn is_saw(&self) -> bool {
        distinct(&self.vertices)
    }

    /// First and last vertex coincide and nothing else repeats.
    pub fn is_closed_saw(&self) -> bool {
        self.is_closed() && distinct(&self.vertices[..self.vertices.len() - 1])
    }

    /// All vertices distinct except that the last may repeat an earlier one.
    pub fn is_weak_saw(&self) -> bool {
        distinct(&self.vertices[..self.vertices.len() - 1])
    }
}

fn distinct(vertices: &[Vertex]) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(vertices.len());
    vertices.iter().all(|v| seen.insert(*v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: i32, q: i32) -> Vertex {
        Vertex::new(p, q)
    }

    #[test]
    fn edge_rule_examples() {
        assert!(edge_exists(v(0, 0), v(1, 0)));
        assert!(!edge_exists(v(1, 0), v(2, 0)));
        assert!(edge_exists(v(5, 3), v(5, 4)));
        assert!(!edge_exists(v(0, 0), v(2, 0)));
        assert!(!edge_exists(v(0, 0), v(1, 1)));
        assert!(!edge_exists(v(0, 0), v(0, 0)));
    }

    #[test]
    fn neighbor_examples() {
        let mut n0 = neighbors(v(0, 0)).to_vec();
        n0.sort();
        assert_eq!(n0, vec![v(0, -1), v(0, 1), v(1, 0)]);
        let mut n1 = neighbors(v(1, 0)).to_vec();
        n1.sort();
        assert_eq!(n1, vec![v(0, 0), v(1, -1), v(1, 1)]);
    }

    #[test]
    fn cubic_and_symmetric() {
        for p in -6..6 {
            for q in -6..6 {
                let x = v(p, q);
                let ns = neighbors(x);
                assert!(distinct(&ns));
                for y in ns {
                    assert!(edge_exists(x, y));
                    assert!(neighbors(y).contains(&x));
                }
            }
        }
    }

    #[test]
    fn ell_examples() {
        let a = Edge::new(v(0, 0), v(1, 0)).unwrap();
        assert_eq!(ell_traversed(a, v(0, 0)).unwrap().exponent(), 0);
        let up = Edge::new(v(0, 0), v(0, 1)).unwrap();
        assert_eq!(ell_traversed(up, v(0, 0)).unwrap().exponent(), 2);
        assert_eq!(ell_traversed(up, v(0, 1)).unwrap().exponent(), 5);
        assert!(matches!(
            ell_traversed(up, v(3, 3)),
            Err(LatticeError::NotAnEndvertex { .. })
        ));
    }

    #[test]
    fn reversal_and_multiplicative_property() {
        for p in -5..5 {
            for q in -5..5 {
                let x = v(p, q);
                let mut exps: Vec<i64> = neighbors(x)
                    .iter()
                    .map(|&y| {
                        let e = Edge::new(x, y).unwrap();
                        let out = ell_traversed(e, x).unwrap();
                        let back = ell_traversed(e, y).unwrap();
                        assert_eq!(out.reversed(), back);
                        assert_eq!(out, step_direction(x, y));
                        out.exponent() as i64
                    })
                    .collect();
                exps.sort();
                let k = exps[0];
                assert!(k < 2);
                assert_eq!(exps, vec![k, k + 2, k + 4]);
            }
        }
    }

    #[test]
    fn walk_validation() {
        assert_eq!(Walk::from_coords(&[(0, 0)]), Err(LatticeError::TooShort));
        assert!(matches!(
            Walk::from_coords(&[(0, 0), (1, 0), (0, 0)]),
            Err(LatticeError::Backtrack(..))
        ));
        assert!(matches!(
            Walk::from_coords(&[(1, 0), (2, 0)]),
            Err(LatticeError::NotAnEdge(..))
        ));
    }

    #[test]
    fn walk_classification() {
        let hex =
            Walk::from_coords(&[(0, 0), (1, 0), (1, 1), (1, 2), (0, 2), (0, 1), (0, 0)]).unwrap();
        assert!(hex.is_closed_saw());
        assert!(hex.is_weak_saw());
        assert!(!hex.is_saw());
        let lollipop = Walk::from_coords(&[
            (0, -1),
            (0, 0),
            (1, 0),
            (1, 1),
            (1, 2),
            (0, 2),
            (0, 1),
            (0, 0),
        ])
        .unwrap();
        assert!(lollipop.is_weak_saw());
        assert!(!lollipop.is_closed_saw());
        let mut twice = lollipop.vertices().to_vec();
        twice.push(v(1, 0));
        assert!(!Walk::new(twice).unwrap().is_weak_saw());
    }

    #[test]
    fn mirror_examples() {
        let w = Walk::from_coords(&[(0, 0), (0, 1)]).unwrap();
        assert_eq!(w.mirror(), Walk::from_coords(&[(0, 0), (0, -1)]).unwrap());
        let long = Walk::from_coords(&[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]).unwrap();
        assert_eq!(long.mirror().mirror(), long);
        assert!(Walk::new(long.mirror().vertices().to_vec()).is_ok());
    }
}
