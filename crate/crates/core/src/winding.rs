//! Hook weights and winding numbers.
//!
//! A hook is a two-step walk. Its weight is `+1` (left) or `-1` (right) and
//! is read off the direction labels: the outgoing label differs from the
//! incoming one by `ζ^{±1}`, and the sign of that exponent is the weight.
//! Summing hook weights along a walk gives `r(w)`, and consequently
//! `ζ^{r(w)} = ℓ(ē_n) / ℓ(ē_1)` in the walk's natural orientation.

use thiserror::Error;

use crate::lattice::{ell_traversed, Direction, Edge, LatticeError, Vertex, Walk};

/// Signed winding number; never reduced modulo anything.
pub type Winding = i32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WindingError {
    #[error("edges {0} and {1} do not form a hook at {2}")]
    InvalidHook(Edge, Edge, Vertex),
    #[error("walk is not closed")]
    NotClosed,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Weight of the turn from a step labelled `incoming` to one labelled
/// `outgoing`, both in the walk's direction of travel.
#[inline]
pub fn turn(incoming: Direction, outgoing: Direction) -> Option<Winding> {
    match (outgoing.exponent() + 6 - incoming.exponent()) % 6 {
        1 => Some(1),
        5 => Some(-1),
        _ => None,
    }
}

/// Weight of the hook that enters `center` along `e1` and leaves along `e2`.
pub fn hook_weight(e1: Edge, e2: Edge, center: Vertex) -> Result<Winding, WindingError> {
    let invalid = || WindingError::InvalidHook(e1, e2, center);
    if e1 == e2 {
        return Err(invalid());
    }
    let start = e1.other(center).map_err(|_| invalid())?;
    let incoming = ell_traversed(e1, start)?;
    let outgoing = ell_traversed(e2, center).map_err(|_| invalid())?;
    turn(incoming, outgoing).ok_or_else(invalid)
}

/// `r(w)`: the sum of the weights of the `|w| - 1` hooks inside `w`.
pub fn winding(w: &Walk) -> Winding {
    let dirs: Vec<Direction> = w.step_directions().collect();
    dirs.windows(2)
        .map(|d| turn(d[0], d[1]).expect("consecutive steps of a walk always form a hook"))
        .sum()
}

/// `r*(w)`: the winding of a closed walk including the hook at its
/// initial/final vertex.
pub fn complete_winding(w: &Walk) -> Result<Winding, WindingError> {
    if !w.is_closed() {
        return Err(WindingError::NotClosed);
    }
    let mut dirs = w.step_directions();
    let first = dirs.next().expect("walks have at least one step");
    let last = dirs.last().unwrap_or(first);
    let closing = turn(last, first).ok_or(WindingError::NotClosed)?;
    Ok(winding(w) + closing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Vertex;

    fn v(p: i32, q: i32) -> Vertex {
        Vertex::new(p, q)
    }

    fn e(a: (i32, i32), b: (i32, i32)) -> Edge {
        Edge::new(a.into(), b.into()).unwrap()
    }

    #[test]
    fn hook_examples() {
        let e1 = e((1, 0), (0, 0));
        assert_eq!(hook_weight(e1, e((0, 0), (0, 1)), v(0, 0)), Ok(-1));
        assert_eq!(hook_weight(e1, e((0, 0), (0, -1)), v(0, 0)), Ok(1));
    }

    #[test]
    fn hook_errors() {
        let e1 = e((1, 0), (0, 0));
        assert!(matches!(
            hook_weight(e1, e1, v(0, 0)),
            Err(WindingError::InvalidHook(..))
        ));
        assert!(matches!(
            hook_weight(e1, e((5, 5), (5, 6)), v(0, 0)),
            Err(WindingError::InvalidHook(..))
        ));
    }

    #[test]
    fn hook_reversal_cancels() {
        for p in -3..3 {
            for q in -3..3 {
                let c = v(p, q);
                let ns = crate::lattice::neighbors(c);
                for &a in &ns {
                    for &b in &ns {
                        if a == b {
                            continue;
                        }
                        let there =
                            hook_weight(Edge::between(a, c), Edge::between(c, b), c).unwrap();
                        let back =
                            hook_weight(Edge::between(b, c), Edge::between(c, a), c).unwrap();
                        assert_eq!(there + back, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn single_edge_has_zero_winding() {
        assert_eq!(winding(&Walk::from_coords(&[(0, 0), (1, 0)]).unwrap()), 0);
    }

    #[test]
    fn hexagon_complete_winding() {
        let hex =
            Walk::from_coords(&[(0, 0), (1, 0), (1, 1), (1, 2), (0, 2), (0, 1), (0, 0)]).unwrap();
        let r = complete_winding(&hex).unwrap();
        assert_eq!(r, 6);
        assert_eq!(complete_winding(&hex.reverse()).unwrap(), -6);
        let open = Walk::from_coords(&[(0, 0), (1, 0)]).unwrap();
        assert_eq!(complete_winding(&open), Err(WindingError::NotClosed));
    }

    #[test]
    fn winding_matches_label_ratio() {
        let w = Walk::from_coords(&[(0, 0), (1, 0), (1, 1), (1, 2), (0, 2), (0, 1)]).unwrap();
        assert_eq!(winding(&w), 4);
        let dirs: Vec<_> = w.step_directions().collect();
        let diff = dirs[dirs.len() - 1].exponent() as i32 - dirs[0].exponent() as i32;
        assert_eq!(diff.rem_euclid(6), winding(&w).rem_euclid(6));
    }
}
