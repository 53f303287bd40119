//! Seeded random instances: bounded LPs, binary programs and connected
//! networks. The same seed always yields the same instance.

use std::ops::RangeInclusive;

use aos_core::power::{GeneratorData, LineData, LoadData};
use aos_core::{LpModel, Network, ObjectiveSense, Role, RowSense};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut impl Rng) -> f64 {
    f64::from(rng.random_range(-4i32..=4))
}

fn sense(rng: &mut impl Rng) -> ObjectiveSense {
    if rng.random_bool(0.5) { ObjectiveSense::Minimize } else { ObjectiveSense::Maximize }
}

fn row_sense(rng: &mut impl Rng) -> RowSense {
    match rng.random_range(0..6) {
        0..=2 => RowSense::Le,
        3..=4 => RowSense::Ge,
        _ => RowSense::Eq,
    }
}

/// Bounded LP with integer data in small ranges, `vars` variables in
/// `[l, l + w]` with `l ∈ [-5, 0]`, `w ∈ [0, 5]`. Three in four instances
/// have every row pass through or near an integer anchor point, so they are
/// feasible and often degenerate.
pub fn random_lp(rng: &mut impl Rng, vars: RangeInclusive<usize>, rows: RangeInclusive<usize>) -> LpModel {
    let n = rng.random_range(vars);
    let m = rng.random_range(rows);
    let sense = sense(rng);
    let mut model = LpModel::new(sense);
    let mut anchor = Vec::with_capacity(n);
    let ids: Vec<_> = (0..n)
        .map(|j| {
            let l = f64::from(rng.random_range(-5i32..=0));
            let w = f64::from(rng.random_range(0i32..=5));
            anchor.push(l + f64::from(rng.random_range(0..=w as i32)));
            model.add_variable(format!("x{j}"), l, l + w, Role::Generic).expect("fresh name")
        })
        .collect();
    let anchored = rng.random_bool(0.75);
    for i in 0..m {
        let a: Vec<f64> = (0..n).map(|_| small(rng)).collect();
        let s = row_sense(rng);
        let rhs = if anchored {
            let act: f64 = a.iter().zip(&anchor).map(|(a, x)| a * x).sum();
            let slack = f64::from(rng.random_range(0i32..=3));
            match s {
                RowSense::Le => act + slack,
                RowSense::Ge => act - slack,
                RowSense::Eq => act,
            }
        } else {
            f64::from(rng.random_range(-6i32..=10))
        };
        model.add_constraint(format!("r{i}"), ids.iter().copied().zip(a), s, rhs).expect("declared");
    }
    let cost: Vec<_> = ids.iter().map(|&v| (v, small(rng))).collect();
    model.set_objective(sense, cost, 0.0).expect("finite");
    model
}

/// Pure binary program: every variable in `[0, 1]`, integer data. Returns the
/// model and the names of its binaries (all variables).
pub fn random_binary_program(
    rng: &mut impl Rng,
    vars: RangeInclusive<usize>,
    rows: RangeInclusive<usize>,
) -> (LpModel, Vec<String>) {
    let n = rng.random_range(vars);
    let m = rng.random_range(rows);
    let sense = sense(rng);
    let mut model = LpModel::new(sense);
    let ids: Vec<_> = (0..n)
        .map(|j| model.add_variable(format!("b{j}"), 0.0, 1.0, Role::Generic).expect("fresh name"))
        .collect();
    let anchor: Vec<f64> = (0..n).map(|_| f64::from(u8::from(rng.random_bool(0.5)))).collect();
    for i in 0..m {
        let a: Vec<f64> = (0..n).map(|_| small(rng)).collect();
        let s = row_sense(rng);
        let act: f64 = a.iter().zip(&anchor).map(|(a, x)| a * x).sum();
        let slack = f64::from(rng.random_range(0i32..=4));
        let rhs = match s {
            RowSense::Le => act + slack,
            RowSense::Ge => act - slack,
            RowSense::Eq => act,
        };
        model.add_constraint(format!("r{i}"), ids.iter().copied().zip(a), s, rhs).expect("declared");
    }
    let cost: Vec<_> = ids.iter().map(|&v| (v, f64::from(rng.random_range(-9i32..=9)))).collect();
    model.set_objective(sense, cost, 0.0).expect("finite");
    let names = model.var_names();
    (model, names)
}

/// Connected network: random spanning tree plus extra lines, random
/// reactances and limits, costs drawn from a coarse grid so that equal-cost
/// generators (and hence alternative optima) are common.
pub fn random_network(rng: &mut impl Rng, buses: RangeInclusive<usize>) -> Network {
    let n = rng.random_range(buses);
    let bus = |i: usize| (i + 1).to_string();
    let mut pairs: Vec<(usize, usize)> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    for _ in 0..rng.random_range(0..=n) {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        let key = (a.min(b), a.max(b));
        if a != b && !pairs.iter().any(|&(p, q)| (p.min(q), p.max(q)) == key) {
            pairs.push((a, b));
        }
    }
    let lines = pairs
        .iter()
        .map(|&(a, b)| LineData {
            from: bus(a),
            to: bus(b),
            reactance: f64::from(rng.random_range(1u32..=10)) / 10.0,
            limit: f64::from(rng.random_range(4u32..=30)) * 5.0,
        })
        .collect();
    let loads: Vec<LoadData> = (0..n)
        .filter_map(|i| {
            let d = rng.random_range(0u32..=8) * 10;
            (d > 0).then(|| LoadData { bus: bus(i), demand: f64::from(d) })
        })
        .collect();
    let demand: f64 = loads.iter().map(|l| l.demand).sum();
    let mut at: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    if at.is_empty() {
        at.push(rng.random_range(0..n));
    }
    let share = (1.5 * demand / at.len() as f64).max(10.0).ceil();
    let gens = at
        .into_iter()
        .map(|i| GeneratorData { bus: bus(i), cost: f64::from(rng.random_range(1u32..=5)) * 10.0, capacity: share })
        .collect();
    Network::new((0..n).map(bus).collect(), lines, gens, loads).expect("generator produces valid networks")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instance() {
        assert_eq!(random_lp(&mut rng(7), 2..=5, 1..=10), random_lp(&mut rng(7), 2..=5, 1..=10));
        assert_eq!(random_network(&mut rng(7), 3..=6), random_network(&mut rng(7), 3..=6));
        assert_ne!(random_network(&mut rng(7), 3..=6), random_network(&mut rng(8), 3..=6));
    }

    #[test]
    fn shapes_respect_ranges() {
        let mut r = rng(1);
        for _ in 0..50 {
            let m = random_lp(&mut r, 2..=5, 1..=10);
            assert!((2..=5).contains(&m.num_vars()));
            assert!(m.variables().iter().all(|v| v.lower.is_finite() && v.upper.is_finite()));
            let net = random_network(&mut r, 3..=6);
            assert!((3..=6).contains(&net.buses().len()));
            let (b, names) = random_binary_program(&mut r, 3..=10, 1..=5);
            assert_eq!(b.var_names(), names);
        }
    }
}
