use hexwalk::lattice::{neighbors, step_direction, Vertex, Walk};
use hexwalk::winding::{complete_winding, winding};
use proptest::prelude::*;

/// Builds a non-backtracking walk from branch choices, stopping just before
/// the first repeated vertex so the result is self-avoiding.
fn saw_from_choices(start: (i32, i32), choices: &[u8]) -> Walk {
    let mut path = vec![Vertex::new(start.0, start.1)];
    for &c in choices {
        let last = *path.last().unwrap();
        let prev = path.len().checked_sub(2).map(|i| path[i]);
        let options: Vec<Vertex> = neighbors(last)
            .into_iter()
            .filter(|&v| Some(v) != prev)
            .collect();
        let next = options[c as usize % options.len()];
        if path.contains(&next) {
            break;
        }
        path.push(next);
    }
    if path.len() == 1 {
        path.push(neighbors(path[0])[0]);
    }
    Walk::new(path).unwrap()
}

fn arb_saw() -> impl Strategy<Value = Walk> {
    (
        (-5i32..5, -5i32..5),
        proptest::collection::vec(0u8..3, 1..40),
    )
        .prop_map(|(start, choices)| saw_from_choices(start, &choices))
}

proptest! {
    #[test]
    fn generated_walks_are_saws(w in arb_saw()) {
        prop_assert!(w.is_saw());
    }

    #[test]
    fn reversal_negates_winding(w in arb_saw()) {
        prop_assert_eq!(winding(&w.reverse()), -winding(&w));
    }

    #[test]
    fn mirror_negates_winding(w in arb_saw()) {
        prop_assert_eq!(winding(&w.mirror()), -winding(&w));
    }

    #[test]
    fn winding_is_label_ratio(w in arb_saw()) {
        let dirs: Vec<_> = w.step_directions().collect();
        let ratio = dirs[dirs.len() - 1].exponent() as i32 - dirs[0].exponent() as i32;
        prop_assert_eq!(ratio.rem_euclid(6), winding(&w).rem_euclid(6));
    }

    #[test]
    fn winding_is_additive(w in arb_saw(), cut in 1usize..40) {
        let n = w.len();
        prop_assume!(n >= 2);
        let k = 1 + cut % (n - 1);
        // overlapping in one edge, the pieces hold the hooks at
        // v_1..v_{k-1} and v_k..v_{n-1}
        let head = Walk::new(w.vertices()[..=k].to_vec()).unwrap();
        let tail = Walk::new(w.vertices()[k - 1..].to_vec()).unwrap();
        prop_assert_eq!(winding(&head) + winding(&tail), winding(&w));
    }

    #[test]
    fn outgoing_labels_at_a_vertex(p in -20i32..20, q in -20i32..20) {
        let v = Vertex::new(p, q);
        let mut ks: Vec<u8> = neighbors(v).iter().map(|&u| step_direction(v, u).exponent()).collect();
        ks.sort();
        let k = ks[0];
        prop_assert!(k < 2);
        prop_assert_eq!(ks, vec![k, k + 2, k + 4]);
    }

    #[test]
    fn translation_by_even_vectors_preserves_winding(w in arb_saw(), dp in -3i32..3, dq in -3i32..3) {
        // shifts with dp + dq even are lattice automorphisms
        let (dp, dq) = (dp, dq + (dp + dq).rem_euclid(2));
        let moved = Walk::new(w.vertices().iter().map(|v| Vertex::new(v.p + dp, v.q + dq)).collect()).unwrap();
        prop_assert_eq!(winding(&moved), winding(&w));
    }
}

#[test]
fn hexagon_faces_wind_six() {
    for (p, q) in [(0, 0), (1, 1), (-3, 2)] {
        let base = Vertex::new(p, q);
        // the face to the right of an opening-right vertex
        let base = if base.opens_right() {
            base
        } else {
            Vertex::new(p + 1, q)
        };
        let coords = [(0, 0), (1, 0), (1, 1), (1, 2), (0, 2), (0, 1), (0, 0)];
        let cycle = Walk::new(
            coords
                .iter()
                .map(|&(a, b)| Vertex::new(base.p + a, base.q + b))
                .collect(),
        )
        .unwrap();
        assert_eq!(complete_winding(&cycle).unwrap(), 6);
    }
}
