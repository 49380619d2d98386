use hexwalk::cyclotomic::{root48, x_c};
use hexwalk::domains::{start_edge, Domain, PartTag};
use hexwalk::enumerate::{enumerate_weak_to_border, Budget};
use hexwalk::identity::{
    g_table, lhs_series, part_polynomials, rhs_series, verify_corollary2, verify_corollary5,
    verify_prop1,
};
use hexwalk::series::TruncatedSeries;

fn unlimited() -> Budget {
    Budget::unlimited()
}

#[test]
fn prop1_holds_on_trapezoids_at_full_depth() {
    for (r, s) in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2)] {
        let d = Domain::trapezoid(r, s).unwrap();
        let report = verify_prop1(&d, None, &unlimited()).unwrap();
        assert!(report.verified, "{report:?}");
        assert_eq!(report.order, d.vertex_count().unwrap() + 2);
    }
}

#[test]
fn prop1_holds_on_slit_plane() {
    for n in [1, 6, 7, 12, 16] {
        let report = verify_prop1(&Domain::SlitPlane, Some(n), &unlimited()).unwrap();
        assert!(report.verified, "N = {n}: {report:?}");
    }
}

#[test]
fn full_depth_is_a_fixed_point() {
    // beyond |X| + 1 no walk or cycle can contribute
    let d = Domain::trapezoid(2, 2).unwrap();
    let full = lhs_series(&d, 18, &unlimited()).unwrap().series;
    assert!(full.coeff(17).unwrap().is_zero());
    assert!(full.coeff(18).unwrap().is_zero());
    let rhs = rhs_series(&d, 18, &unlimited()).unwrap().series;
    assert!(rhs.coeff(18).unwrap().is_zero());
}

#[test]
fn truncations_agree_with_full_series() {
    let d = Domain::SlitPlane;
    let long = lhs_series(&d, 12, &unlimited()).unwrap().series;
    let short = lhs_series(&d, 8, &unlimited()).unwrap().series;
    for p in 1..=8 {
        assert_eq!(long.coeff(p), short.coeff(p));
    }
}

#[test]
fn slit_plane_lhs_specialises_to_minus_x() {
    let lhs = lhs_series(&Domain::SlitPlane, 14, &unlimited())
        .unwrap()
        .series;
    let minus_x = TruncatedSeries::minus_x(14).specialize(0).unwrap();
    for j in 0..8 {
        assert_eq!(lhs.specialize(j).unwrap(), minus_x, "j = {j}");
    }
}

#[test]
fn winding_is_constant_per_border_edge() {
    for d in [
        Domain::trapezoid(2, 2).unwrap(),
        Domain::trapezoid(3, 3).unwrap(),
        Domain::trapezoid(4, 2).unwrap(),
        Domain::SlitPlane,
    ] {
        let order = if d.is_finite() {
            d.vertex_count().unwrap() + 2
        } else {
            14
        };
        // lhs_series fails on any inconsistency
        let run = lhs_series(&d, order, &unlimited()).unwrap();
        assert!(!run.edge_windings.is_empty());
        for (e, r) in &run.edge_windings {
            let label = d.classify(*e).unwrap();
            assert_eq!(label.expected_r, *r, "{d} {e}");
        }
    }
}

#[test]
fn every_trapezoid_border_edge_is_reached() {
    let d = Domain::trapezoid(3, 2).unwrap();
    let run = lhs_series(&d, d.vertex_count().unwrap() + 2, &unlimited()).unwrap();
    let reached: Vec<_> = run.edge_windings.keys().copied().collect();
    let all: Vec<_> = d.border_edges(0).into_iter().collect();
    assert_eq!(reached, all);
}

#[test]
fn part_polynomials_partition_the_walks() {
    let d = Domain::trapezoid(2, 3).unwrap();
    let polys = part_polynomials(&d, &unlimited()).unwrap();
    let mut by_tag = std::collections::BTreeMap::new();
    let mut total = 0u64;
    enumerate_weak_to_border(&d, 30, |_, e| {
        total += 1;
        *by_tag.entry(d.classify(e).unwrap().tag).or_insert(0u64) += 1;
    });
    assert_eq!(polys.walks, total);
    let sum = |v: &[u64]| v.iter().sum::<u64>();
    assert_eq!(
        sum(&polys.a),
        by_tag[&PartTag::APlus] + by_tag[&PartTag::AMinus]
    );
    assert_eq!(
        sum(&polys.b),
        by_tag[&PartTag::BPlus] + by_tag[&PartTag::BMinus]
    );
    assert_eq!(sum(&polys.c), by_tag[&PartTag::C]);
    assert_eq!(by_tag[&PartTag::Start], 1);
    // mirror symmetry splits A and B evenly
    assert_eq!(by_tag[&PartTag::APlus], by_tag[&PartTag::AMinus]);
    assert_eq!(by_tag[&PartTag::BPlus], by_tag[&PartTag::BMinus]);
}

#[test]
fn corollary2_for_all_j() {
    let reports = verify_corollary2(16, &unlimited()).unwrap();
    assert_eq!(reports.len(), 8);
    for (j, r) in reports.iter().enumerate() {
        assert_eq!(r.j, Some(j as i64));
        assert!(r.verified, "{r:?}");
    }
}

#[test]
fn corollary2_j7_low_coefficients() {
    let table = g_table(2, &unlimited()).unwrap();
    let rhs: Vec<_> = table
        .to_series()
        .unwrap()
        .specialize(7)
        .unwrap()
        .into_iter()
        .map(|z| -z)
        .collect();
    assert!(rhs[0].is_one());
    assert_eq!(rhs[1], root48(3) + root48(45));
    assert!((rhs[1].to_complex().re - 1.847_759_065).abs() < 1e-9);
}

#[test]
fn corollary5_on_several_trapezoids() {
    for (r, s) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        let report = verify_corollary5(r, s, &unlimited()).unwrap();
        assert!(report.verified, "{report:?}");
    }
}

#[test]
fn corollary5_numeric_consequence() {
    let d = Domain::trapezoid(2, 3).unwrap();
    let polys = part_polynomials(&d, &unlimited()).unwrap();
    let xc = x_c().to_complex().re;
    let eval = |p: &[u64]| p.iter().rev().fold(0.0, |acc, &c| acc * xc + c as f64);
    let sum = eval(&polys.a) + eval(&polys.b) + eval(&polys.c);
    let ceiling = xc / (3.0 * std::f64::consts::PI / 8.0).cos();
    assert!(sum <= ceiling + 1e-12);
    assert!(ceiling < 2.0);
}

#[test]
fn start_edge_only_reached_by_a() {
    let d = Domain::trapezoid(3, 3).unwrap();
    let mut lens = vec![];
    enumerate_weak_to_border(&d, 40, |w, e| {
        if e == start_edge() {
            lens.push(w.len());
        }
    });
    assert_eq!(lens, vec![1]);
}
