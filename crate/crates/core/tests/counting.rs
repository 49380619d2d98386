use std::collections::HashSet;

use hexwalk::bounds::{build_table, check_inequalities};
use hexwalk::domains::Domain;
use hexwalk::enumerate::{
    class_counts, closed_saw_census, enumerate_weak_to_border, trapezoidal_counts, Budget,
    WalkClass,
};
use hexwalk::lattice::{neighbors, Vertex};

/// Known values of s_n for the hexagonal lattice, n = 1..25.
const S: [u64; 25] = [
    3, 6, 12, 24, 48, 90, 174, 336, 648, 1218, 2328, 4416, 8388, 15780, 29892, 56268, 106200,
    199350, 375504, 704304, 1323996, 2479692, 4654464, 8710212, 16328220,
];

fn naive(path: &mut Vec<Vertex>, left: usize, counts: &mut [u64]) {
    counts[path.len() - 1] += 1;
    if left == 0 {
        return;
    }
    for next in neighbors(*path.last().unwrap()) {
        if !path.contains(&next) {
            path.push(next);
            naive(path, left - 1, counts);
            path.pop();
        }
    }
}

#[test]
fn saw_counts_match_known_sequence() {
    let s = class_counts(WalkClass::Free, 25, &Budget::unlimited()).unwrap();
    assert_eq!(&s[1..], &S);
}

#[test]
fn naive_oracle_agrees_to_twelve() {
    let mut counts = vec![0; 13];
    naive(&mut vec![Vertex::ORIGIN], 12, &mut counts);
    assert_eq!(&counts[1..], &S[..12]);
}

#[test]
fn half_plane_walks_by_filtering() {
    // oracle: all walks from a, kept when every later vertex has p >= 1
    let b_walks = |n: usize| {
        let mut kept = 0u64;
        fn go(path: &mut Vec<Vertex>, left: usize, kept: &mut u64) {
            if left == 0 {
                if path[1..].iter().all(|v| v.p >= 1) {
                    *kept += 1;
                }
                return;
            }
            for next in neighbors(*path.last().unwrap()) {
                if !path.contains(&next) {
                    path.push(next);
                    go(path, left - 1, kept);
                    path.pop();
                }
            }
        }
        go(
            &mut vec![Vertex::ORIGIN, Vertex::new(1, 0)],
            n - 1,
            &mut kept,
        );
        kept
    };
    let c = class_counts(WalkClass::HalfPlane, 12, &Budget::unlimited()).unwrap();
    for n in 1..=12 {
        assert_eq!(c[n], b_walks(n), "n = {n}");
    }
}

#[test]
fn trapezoidal_counts_match_union_to_twelve() {
    let fast = trapezoidal_counts(12, 12, &Budget::unlimited()).unwrap();
    for n in [4, 8, 11, 12] {
        let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
        for r in 2..=n as i32 {
            for s in 2..=n as i32 {
                let t = Domain::trapezoid(r, s).unwrap();
                let exits = t.exit_edges().unwrap();
                enumerate_weak_to_border(&t, n, |w, e| {
                    if w.len() == n && exits.contains(&e) {
                        seen.insert(w.vertices.to_vec());
                    }
                });
            }
        }
        assert_eq!(fast[n], seen.len() as u64, "n = {n}");
    }
}

#[test]
fn census_to_sixteen() {
    let census = closed_saw_census(Vertex::new(2, -1), 16, &Budget::unlimited()).unwrap();
    for (len, by_r) in &census {
        assert!(by_r.keys().all(|r| r.abs() == 6), "length {len}: {by_r:?}");
        assert_eq!(by_r.get(&6), by_r.get(&-6));
        assert_eq!(len % 2, 0);
    }
    // the root does not matter: all vertices are alike up to symmetry
    let at_origin = closed_saw_census(Vertex::ORIGIN, 16, &Budget::unlimited()).unwrap();
    assert_eq!(census, at_origin);
}

#[test]
fn table_to_fifteen_passes_all_checks() {
    let t = build_table(15, &Budget::unlimited()).unwrap();
    let checks = check_inequalities(&t).unwrap();
    assert!(checks.iter().all(|c| c.holds));
    for name in ["b_bound", "c_recurrence", "d_bound", "submultiplicative"] {
        assert!(checks.iter().any(|c| c.name == name));
    }
}

#[test]
fn budget_is_enforced_across_threads() {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(3)
        .build()
        .unwrap();
    let res = pool.install(|| class_counts(WalkClass::Free, 22, &Budget::new(50_000)));
    assert!(res.is_err());
}
