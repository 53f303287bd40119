#![allow(dead_code)]

use aos_core::power::{GeneratorData, LineData, LoadData};
use aos_core::{LpModel, Network, ObjectiveSense, Role, RowSense, VarId};
use proptest::prelude::*;

#[derive(Debug, Clone)]
pub struct LpSpec {
    pub sense: ObjectiveSense,
    pub bounds: Vec<(f64, f64)>,
    pub rows: Vec<(Vec<f64>, RowSense, f64)>,
    pub cost: Vec<f64>,
}

impl LpSpec {
    pub fn build(&self) -> LpModel {
        let mut m = LpModel::new(self.sense);
        let vars: Vec<VarId> = self
            .bounds
            .iter()
            .enumerate()
            .map(|(j, &(l, u))| m.add_variable(format!("x{j}"), l, u, Role::Generic).unwrap())
            .collect();
        for (i, (coeffs, sense, rhs)) in self.rows.iter().enumerate() {
            let terms = vars.iter().zip(coeffs).map(|(&v, &a)| (v, a));
            m.add_constraint(format!("r{i}"), terms, *sense, *rhs).unwrap();
        }
        let obj = vars.iter().zip(&self.cost).map(|(&v, &c)| (v, c));
        m.set_objective(self.sense, obj, 0.0).unwrap();
        m
    }
}

fn small() -> impl Strategy<Value = f64> {
    (-4i32..=4).prop_map(f64::from)
}

fn row_sense() -> impl Strategy<Value = RowSense> {
    prop_oneof![3 => Just(RowSense::Le), 2 => Just(RowSense::Ge), 1 => Just(RowSense::Eq)]
}

fn objective_sense() -> impl Strategy<Value = ObjectiveSense> {
    prop_oneof![Just(ObjectiveSense::Minimize), Just(ObjectiveSense::Maximize)]
}

/// Bounded LPs with small integer data, so degenerate and redundant
/// constraints show up often. Three in four instances are built around an
/// anchor point and are feasible; the rest use arbitrary right-hand sides.
pub fn bounded_lp(max_vars: usize, max_rows: usize) -> impl Strategy<Value = LpSpec> {
    (2..=max_vars, 1..=max_rows).prop_flat_map(|(n, m)| {
        let bound = ((-5i32..=0), (0i32..=5)).prop_map(|(l, w)| (f64::from(l), f64::from(l + w)));
        let row = (proptest::collection::vec(small(), n), row_sense(), -6i32..=10, 0i32..=3);
        (
            objective_sense(),
            proptest::collection::vec(bound, n),
            proptest::collection::vec(row, m),
            proptest::collection::vec(small(), n),
            proptest::collection::vec(0.0..=1.0f64, n),
            prop::bool::weighted(0.75),
        )
            .prop_map(|(sense, bounds, raw, cost, t, anchored)| {
                let x0: Vec<f64> = bounds.iter().zip(&t).map(|(&(l, u), &t)| (l + t * (u - l)).round()).collect();
                let rows = raw
                    .into_iter()
                    .map(|(a, s, b, slack)| {
                        if !anchored {
                            return (a, s, f64::from(b));
                        }
                        let act: f64 = a.iter().zip(&x0).map(|(a, x)| a * x).sum();
                        let rhs = match s {
                            RowSense::Le => act + f64::from(slack),
                            RowSense::Ge => act - f64::from(slack),
                            RowSense::Eq => act,
                        };
                        (a, s, rhs)
                    })
                    .collect();
                LpSpec { sense, bounds, rows, cost }
            })
    })
}

/// Pure binary programs: bounds [0, 1] on every variable.
pub fn binary_lp(max_vars: usize, max_rows: usize) -> impl Strategy<Value = LpSpec> {
    bounded_lp(max_vars, max_rows).prop_map(|mut s| {
        for b in &mut s.bounds {
            *b = (0.0, 1.0);
        }
        s
    })
}

/// Connected networks: a random spanning tree plus extra lines, at least one
/// generator with enough total capacity for the load.
pub fn network(max_buses: usize) -> impl Strategy<Value = Network> {
    (2..=max_buses).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=n);
        let reactance = proptest::collection::vec(1u32..=10, 2 * n);
        let limit = proptest::collection::vec(20u32..=150, 2 * n);
        let cost = proptest::collection::vec(prop::option::of(1u32..=100), n);
        let load = proptest::collection::vec(0u32..=80, n);
        (parents, extra, reactance, limit, cost, load).prop_map(move |(parents, extra, x, lim, cost, load)| {
            let bus = |i: usize| format!("b{i}");
            let mut pairs: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            for (a, b) in extra {
                let (a, b) = (a.min(b), a.max(b));
                if a != b && !pairs.iter().any(|&(p, q)| (p.min(q), p.max(q)) == (a, b)) {
                    pairs.push((a, b));
                }
            }
            let lines = pairs
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| LineData {
                    from: bus(a),
                    to: bus(b),
                    reactance: f64::from(x[k % x.len()]) / 10.0,
                    limit: f64::from(lim[k % lim.len()]),
                })
                .collect();
            let demand: f64 = load.iter().map(|&d| f64::from(d)).sum();
            let mut gens: Vec<GeneratorData> = cost
                .iter()
                .enumerate()
                .filter_map(|(i, c)| c.map(|c| (i, c)))
                .map(|(i, c)| GeneratorData { bus: bus(i), cost: f64::from(c), capacity: 0.0 })
                .collect();
            if gens.is_empty() {
                gens.push(GeneratorData { bus: bus(0), cost: 10.0, capacity: 0.0 });
            }
            let share = (demand * 1.5 / gens.len() as f64).max(10.0);
            for g in &mut gens {
                g.capacity = share;
            }
            let loads = load
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(i, &d)| LoadData { bus: bus(i), demand: f64::from(d) })
                .collect();
            Network::new((0..n).map(bus).collect(), lines, gens, loads).unwrap()
        })
    })
}

pub fn same_points(a: &[Vec<f64>], b: &[Vec<f64>], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(p, q)| p.iter().zip(q).all(|(x, y)| (x - y).abs() <= tol))
}
