//! Binary programs: LP-based branch-and-bound and no-good-cut enumeration.
//!
//! No-good cuts constrain only the declared binary variables. Two pool
//! entries with the same binary assignment but different continuous values
//! are never both reported.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{LpModel, ObjectiveSense, RowSense, VarId};
use crate::simplex::{solve, SimplexResult, SolveStatus};
use crate::standard::to_standard_form;
use crate::sublevel::SublevelSpec;

const INTEGRALITY_TOL: f64 = 1e-6;
const LEVEL_TOL: f64 = 1e-9;

fn binary_indices(model: &LpModel, binary_vars: &[String]) -> Result<Vec<usize>> {
    let mut idx = Vec::with_capacity(binary_vars.len());
    for name in binary_vars {
        let v = model.var_index(name).ok_or_else(|| Error::UnknownVariable(name.clone()))?;
        let var = &model.variables()[v.0];
        if var.lower < 0.0 || var.upper > 1.0 {
            return Err(Error::NonBinaryBounds(name.clone()));
        }
        if !idx.contains(&v.0) {
            idx.push(v.0);
        }
    }
    idx.sort_unstable();
    Ok(idx)
}

/// Optimal point with every listed variable in {0, 1}.
///
/// Depth-first branch-and-bound on LP relaxations; branches on the
/// lowest-index fractional binary and explores the 0-branch first.
pub fn solve_binary(model: &LpModel, binary_vars: &[String]) -> Result<SimplexResult> {
    let idx = binary_indices(model, binary_vars)?;
    branch_and_bound(model, &idx)
}

fn branch_and_bound(model: &LpModel, binaries: &[usize]) -> Result<SimplexResult> {
    let sense = model.objective().sense;
    let mut incumbent: Option<SimplexResult> = None;
    let mut iterations = 0;
    let mut stack: Vec<Vec<(usize, f64)>> = alloc::vec![Vec::new()];
    while let Some(fixings) = stack.pop() {
        let mut node = model.clone();
        for &(j, v) in &fixings {
            node.set_bounds(VarId(j), v, v)?;
        }
        let r = solve(&to_standard_form(&node)?);
        iterations += r.iterations;
        match r.status {
            SolveStatus::Optimal => {}
            SolveStatus::Infeasible => continue,
            SolveStatus::Unbounded => {
                let mut out = r;
                out.iterations = iterations;
                return Ok(out);
            }
            s => return Err(Error::Solver(s)),
        }
        if let Some(best) = &incumbent {
            if !sense.better(r.z_star, best.z_star, LEVEL_TOL) {
                continue;
            }
        }
        let fractional = binaries
            .iter()
            .copied()
            .find(|&j| r.x_star[j] > INTEGRALITY_TOL && r.x_star[j] < 1.0 - INTEGRALITY_TOL);
        match fractional {
            Some(j) => {
                let mut one = fixings.clone();
                one.push((j, 1.0));
                stack.push(one);
                let mut zero = fixings;
                zero.push((j, 0.0));
                stack.push(zero);
            }
            None => {
                let mut r = r;
                for &j in binaries {
                    r.x_star[j] = if r.x_star[j] > 0.5 { 1.0 } else { 0.0 };
                }
                r.z_star = model.objective_value(&r.x_star);
                incumbent = Some(r);
            }
        }
    }
    Ok(match incumbent {
        Some(mut r) => {
            r.iterations = iterations;
            r
        }
        None => SimplexResult {
            status: SolveStatus::Infeasible,
            x_star: Vec::new(),
            z_star: f64::NAN,
            basis: Vec::new(),
            iterations,
            ray: None,
        },
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BinarySolution {
    /// Values of the binary variables, in declaration order.
    pub assignment: Vec<u8>,
    /// Full point, continuous variables included.
    pub point: Vec<f64>,
    pub objective: f64,
}

/// Binary solutions inside a sublevel set, best objective first, ties in
/// lexicographic order of the assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct BinarySolutionPool {
    /// Names of the binary variables, in the order used by assignments.
    pub binaries: Vec<String>,
    pub solutions: Vec<BinarySolution>,
    /// NaN when the model has no binary-feasible point and τ was relative.
    pub tau: f64,
    /// No further binary-feasible assignment lies inside the sublevel set.
    pub exhausted: bool,
}

/// Enumerates binary solutions within the level given by `spec` by repeatedly
/// solving and adding the no-good cut
/// `Σ_{x*_j = 1} (1 − x_j) + Σ_{x*_j = 0} x_j ≥ 1`.
pub fn enumerate_binary(
    model: &LpModel,
    binary_vars: &[String],
    spec: SublevelSpec,
    limit: usize,
) -> Result<BinarySolutionPool> {
    if limit == 0 {
        return Err(Error::ZeroLimit);
    }
    let idx = binary_indices(model, binary_vars)?;
    let sense = model.objective().sense;
    let binaries: Vec<String> = idx.iter().map(|&j| model.variables()[j].name.clone()).collect();
    let mut work = model.clone();
    let mut solutions: Vec<BinarySolution> = Vec::new();
    let mut tau = match spec {
        SublevelSpec::Absolute(t) => t,
        SublevelSpec::RelativeGap(_) => f64::NAN,
    };
    let exhausted = loop {
        let r = branch_and_bound(&work, &idx)?;
        match r.status {
            SolveStatus::Optimal => {}
            SolveStatus::Infeasible => break true,
            s => return Err(Error::Solver(s)),
        }
        if solutions.is_empty() {
            tau = spec.resolve(r.z_star, sense)?;
        }
        if sense.better(tau, r.z_star, LEVEL_TOL) {
            break true;
        }
        let assignment: Vec<u8> = idx.iter().map(|&j| r.x_star[j] as u8).collect();
        let ones = assignment.iter().filter(|&&a| a == 1).count();
        let cut = idx.iter().zip(&assignment).map(|(&j, &a)| (VarId(j), if a == 1 { -1.0 } else { 1.0 }));
        work.add_constraint(format!("nogood_{}", solutions.len()), cut, RowSense::Ge, 1.0 - ones as f64)?;
        solutions.push(BinarySolution { assignment, point: r.x_star, objective: r.z_star });
        if solutions.len() >= limit {
            break false;
        }
    };
    solutions.sort_by(|a, b| {
        let by_value = match sense {
            ObjectiveSense::Minimize => a.objective.total_cmp(&b.objective),
            ObjectiveSense::Maximize => b.objective.total_cmp(&a.objective),
        };
        if (a.objective - b.objective).abs() <= LEVEL_TOL * (1.0 + a.objective.abs()) {
            a.assignment.cmp(&b.assignment)
        } else {
            by_value
        }
    });
    Ok(BinarySolutionPool { binaries, solutions, tau, exhausted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Role;
    use alloc::vec;

    fn free_binaries(n: usize, sense: ObjectiveSense) -> (LpModel, Vec<String>) {
        let mut m = LpModel::new(sense);
        let vars: Vec<_> = (0..n)
            .map(|i| m.add_variable(format!("x{i}"), 0.0, 1.0, Role::Generic).unwrap())
            .collect();
        m.set_objective(sense, vars.iter().map(|&v| (v, 1.0)), 0.0).unwrap();
        (m, (0..n).map(|i| format!("x{i}")).collect())
    }

    #[test]
    fn minimum_of_free_binaries_is_zero() {
        let (m, names) = free_binaries(3, ObjectiveSense::Minimize);
        let r = solve_binary(&m, &names).unwrap();
        assert_eq!(r.status, SolveStatus::Optimal);
        assert_eq!(r.z_star, 0.0);
        assert_eq!(r.x_star, [0.0, 0.0, 0.0]);
    }

    #[test]
    fn symmetric_packing_picks_one() {
        let (mut m, names) = free_binaries(2, ObjectiveSense::Maximize);
        m.add_constraint("pack", [(VarId(0), 1.0), (VarId(1), 1.0)], RowSense::Le, 1.0).unwrap();
        let r = solve_binary(&m, &names).unwrap();
        assert_eq!(r.z_star, 1.0);
        assert_eq!(r.x_star.iter().sum::<f64>(), 1.0);
    }

    #[test]
    fn pool_within_level_one() {
        let (m, names) = free_binaries(3, ObjectiveSense::Minimize);
        let pool = enumerate_binary(&m, &names, SublevelSpec::Absolute(1.0), 100).unwrap();
        let got: Vec<_> = pool.solutions.iter().map(|s| s.assignment.clone()).collect();
        assert_eq!(got, [vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert!(pool.exhausted);
    }

    #[test]
    fn pool_at_level_zero_is_a_singleton() {
        let (m, names) = free_binaries(3, ObjectiveSense::Minimize);
        let pool = enumerate_binary(&m, &names, SublevelSpec::Absolute(0.0), 100).unwrap();
        assert_eq!(pool.solutions.len(), 1);
        assert_eq!(pool.solutions[0].assignment, [0, 0, 0]);
        assert!(pool.exhausted);
    }

    #[test]
    fn limit_stops_without_claiming_exhaustion() {
        let (m, names) = free_binaries(3, ObjectiveSense::Minimize);
        let pool = enumerate_binary(&m, &names, SublevelSpec::Absolute(3.0), 2).unwrap();
        assert_eq!(pool.solutions.len(), 2);
        assert!(!pool.exhausted);
    }

    #[test]
    fn continuous_variables_ride_along() {
        // y is continuous and may differ freely; only x is cut.
        let mut m = LpModel::new(ObjectiveSense::Minimize);
        let x = m.add_variable("x", 0.0, 1.0, Role::Generic).unwrap();
        let y = m.add_variable("y", 0.0, 4.0, Role::Generic).unwrap();
        m.add_constraint("link", [(y, 1.0), (x, -2.0)], RowSense::Ge, 1.0).unwrap();
        m.set_objective(ObjectiveSense::Minimize, [(y, 1.0)], 0.0).unwrap();
        let pool = enumerate_binary(&m, &["x".into()], SublevelSpec::Absolute(10.0), 10).unwrap();
        assert_eq!(pool.solutions.len(), 2);
        assert_eq!(pool.solutions[0].point, [0.0, 1.0]);
        assert_eq!(pool.solutions[1].point, [1.0, 3.0]);
    }

    #[test]
    fn rejects_nonbinary_bounds() {
        let mut m = LpModel::new(ObjectiveSense::Minimize);
        m.add_variable("x", 0.0, 2.0, Role::Generic).unwrap();
        assert_eq!(solve_binary(&m, &["x".into()]), Err(Error::NonBinaryBounds("x".into())));
        assert_eq!(solve_binary(&m, &["nope".into()]), Err(Error::UnknownVariable("nope".into())));
    }
}
