//! Solver and enumerator against the hyperplane-intersection oracle.

mod common;

use aos_core::{
    brute_force_vertices, enumerate_vertices_with, solve, to_standard_form, EnumerateOptions, ObjectiveSense,
    SolveStatus, SublevelSpec,
};
use common::{bounded_lp, same_points, LpSpec};
use proptest::prelude::*;

// Every vertex of X: a level no point can violate.
fn all_vertices(spec: &LpSpec) -> aos_core::VertexSet {
    let m = spec.build();
    let far = match spec.sense {
        ObjectiveSense::Minimize => 1e6,
        ObjectiveSense::Maximize => -1e6,
    };
    brute_force_vertices(&m, far, SublevelSpec::Absolute(far)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn optimum_matches_best_vertex(spec in bounded_lp(6, 8)) {
        let m = spec.build();
        let r = solve(&to_standard_form(&m).unwrap());
        let vs = all_vertices(&spec);
        if vs.is_empty() {
            prop_assert_eq!(r.status, SolveStatus::Infeasible);
        } else {
            prop_assert_eq!(r.status, SolveStatus::Optimal);
            let best = vs.objectives.iter().copied().fold(None, |acc: Option<f64>, v| match acc {
                None => Some(v),
                Some(a) => Some(if spec.sense.better(v, a, 0.0) { v } else { a }),
            }).unwrap();
            prop_assert!((r.z_star - best).abs() <= 1e-6, "{} vs {}", r.z_star, best);
            prop_assert!(m.is_feasible(&r.x_star, 1e-7));
        }
    }

    #[test]
    fn enumeration_matches_oracle(spec in bounded_lp(5, 10), gap in prop_oneof![Just(0.0), Just(0.05), Just(0.5)]) {
        let m = spec.build();
        let r = solve(&to_standard_form(&m).unwrap());
        prop_assume!(r.is_optimal());
        let level = SublevelSpec::RelativeGap(gap);
        let fast = enumerate_vertices_with(&m, r.z_star, level, &EnumerateOptions::default()).unwrap();
        let slow = brute_force_vertices(&m, r.z_star, level).unwrap();
        prop_assert!(fast.complete);
        prop_assert!(same_points(&fast.points, &slow.points, 1e-6), "{:?}\nvs\n{:?}", fast.points, slow.points);
    }

    #[test]
    fn six_variable_instances_match_oracle(spec in bounded_lp(6, 6)) {
        let m = spec.build();
        let r = solve(&to_standard_form(&m).unwrap());
        prop_assume!(r.is_optimal());
        let level = SublevelSpec::RelativeGap(0.2);
        let fast = enumerate_vertices_with(&m, r.z_star, level, &EnumerateOptions::default()).unwrap();
        let slow = brute_force_vertices(&m, r.z_star, level).unwrap();
        prop_assert!(same_points(&fast.points, &slow.points, 1e-6), "{:?}\nvs\n{:?}", fast.points, slow.points);
    }

    #[test]
    fn column_order_does_not_matter(spec in bounded_lp(4, 3), seed in any::<u64>()) {
        let m = spec.build();
        let r = solve(&to_standard_form(&m).unwrap());
        prop_assume!(r.is_optimal());
        let level = SublevelSpec::RelativeGap(0.1);
        let base = enumerate_vertices_with(&m, r.z_star, level, &EnumerateOptions::default()).unwrap();
        let width = to_standard_form(&m).unwrap().num_cols() + 2 * m.num_vars() + m.constraints().len() + 2;
        let mut order: Vec<usize> = (0..width).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let opts = EnumerateOptions { column_order: Some(order), ..Default::default() };
        let shuffled = enumerate_vertices_with(&m, r.z_star, level, &opts).unwrap();
        prop_assert!(same_points(&base.points, &shuffled.points, 1e-9), "{:?}\nvs\n{:?}", base.points, shuffled.points);
    }
}
