//! Containment checks across the relaxation hierarchy, convex-hull
//! membership, ranking by secondary objectives and set comparison.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{LpModel, ObjectiveSense, Role, RowSense};
use crate::power::{build_copper_plate, build_dcopf, build_network_flow, Network};
use crate::projection::{project_point, ProjectionSpec};
use crate::simplex::{solve, SolveStatus};
use crate::standard::to_standard_form;
use crate::sublevel::{apply_box_bounds, make_sublevel_model, SublevelSpec};
use crate::vertex::{enumerate_vertices_with, lex_cmp, EnumerateOptions, VertexSet};

/// Violation above which a projected point counts as outside.
pub const CONTAINMENT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct PointVerdict {
    pub projected: Vec<f64>,
    pub contained: bool,
    pub max_violation: f64,
    /// Worst violated row or bound, if any.
    pub worst: Option<String>,
    /// Every row or bound violated by more than the tolerance.
    pub violated: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairReport {
    /// e.g. `"DC->NF"`.
    pub label: String,
    pub tau: f64,
    pub variables: Vec<String>,
    pub points: Vec<PointVerdict>,
    pub max_violation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContainmentReport {
    pub pairs: Vec<PairReport>,
    pub pass: bool,
}

impl ContainmentReport {
    pub fn from_pairs(pairs: Vec<PairReport>) -> Self {
        let pass = pairs.iter().all(|p| p.pass);
        ContainmentReport { pairs, pass }
    }

    pub fn max_violation(&self) -> f64 {
        self.pairs.iter().map(|p| p.max_violation).fold(0.0, f64::max)
    }
}

/// Projects every point of `points` and tests it against every row and bound
/// of the sublevel model of `relaxed`.
pub fn check_containment(
    points: &VertexSet,
    projection: &ProjectionSpec,
    relaxed: &LpModel,
    z_star: f64,
    spec: SublevelSpec,
) -> Result<ContainmentReport> {
    Ok(ContainmentReport::from_pairs(alloc::vec![check_pair("", points, projection, relaxed, z_star, spec)?]))
}

fn check_pair(
    label: &str,
    points: &VertexSet,
    projection: &ProjectionSpec,
    relaxed: &LpModel,
    z_star: f64,
    spec: SublevelSpec,
) -> Result<PairReport> {
    let idx = projection.indices(&points.variables)?;
    if idx.len() != relaxed.num_vars() {
        return Err(Error::DimensionMismatch { expected: relaxed.num_vars(), found: idx.len() });
    }
    for (&i, v) in idx.iter().zip(relaxed.variables()) {
        if points.variables[i] != v.name {
            return Err(Error::VariableMismatch { expected: v.name.clone(), found: points.variables[i].clone() });
        }
    }
    let sub = make_sublevel_model(relaxed, z_star, spec)?;
    let mut verdicts = Vec::with_capacity(points.len());
    for p in &points.points {
        let q = project_point(p, &points.variables, projection)?;
        let (max_violation, worst) = sub.model.max_violation(&q);
        let violated = sub.model.violations(&q, CONTAINMENT_TOL).into_iter().map(|v| v.name).collect();
        verdicts.push(PointVerdict {
            projected: q,
            contained: max_violation <= CONTAINMENT_TOL,
            max_violation,
            worst,
            violated,
        });
    }
    let max_violation = verdicts.iter().map(|v| v.max_violation).fold(0.0, f64::max);
    Ok(PairReport {
        label: label.into(),
        tau: sub.tau,
        variables: relaxed.var_names(),
        pass: verdicts.iter().all(|v| v.contained),
        points: verdicts,
        max_violation,
    })
}

/// Everything computed while checking one network.
#[derive(Debug, Clone, PartialEq)]
pub struct HierarchyCheck {
    pub z_star: f64,
    pub tau: f64,
    pub dc: VertexSet,
    pub nf: VertexSet,
    pub report: ContainmentReport,
}

/// Enumerates the DC-OPF and Network Flow sublevel sets at the level τ
/// resolved from the DC-OPF optimum, then checks the three containments
/// DC→NF over `(P, f)`, DC→CP over `P` and NF→CP over `P`.
///
/// `tamper` may edit the DC vertex set before checking (negative controls).
pub fn check_hierarchy(
    net: &Network,
    spec: SublevelSpec,
    box_bound: f64,
    opts: &EnumerateOptions,
    tamper: Option<&dyn Fn(&mut VertexSet)>,
) -> Result<HierarchyCheck> {
    let dc = apply_box_bounds(&build_dcopf(net), box_bound)?.model;
    let nf = build_network_flow(net);
    let cp = build_copper_plate(net);
    let r = solve(&to_standard_form(&dc)?);
    if !r.is_optimal() {
        return Err(Error::Solver(r.status));
    }
    let tau = spec.resolve(r.z_star, ObjectiveSense::Minimize)?;
    let level = SublevelSpec::Absolute(tau);
    let mut dc_vs = enumerate_vertices_with(&dc, r.z_star, level, opts)?;
    let nf_vs = enumerate_vertices_with(&nf, r.z_star, level, opts)?;
    if let Some(f) = tamper {
        f(&mut dc_vs);
    }
    let p_f = ProjectionSpec::by_roles(&dc, &[Role::Generation, Role::Flow]);
    let p_only = ProjectionSpec::by_roles(&dc, &[Role::Generation]);
    let pairs = alloc::vec![
        check_pair("DC->NF", &dc_vs, &p_f, &nf, r.z_star, level)?,
        check_pair("DC->CP", &dc_vs, &p_only, &cp, r.z_star, level)?,
        check_pair("NF->CP", &nf_vs, &p_only, &cp, r.z_star, level)?,
    ];
    Ok(HierarchyCheck { z_star: r.z_star, tau, dc: dc_vs, nf: nf_vs, report: ContainmentReport::from_pairs(pairs) })
}

/// Whether `q` is a convex combination of `generators`, decided by the
/// feasibility of `Σλ_k g_k = q, Σλ_k = 1, λ ≥ 0`.
pub fn is_in_convex_hull(q: &[f64], generators: &[Vec<f64>]) -> Result<bool> {
    if generators.is_empty() {
        return Err(Error::EmptyHull);
    }
    if let Some(g) = generators.iter().find(|g| g.len() != q.len()) {
        return Err(Error::DimensionMismatch { expected: q.len(), found: g.len() });
    }
    let mut m = LpModel::new(ObjectiveSense::Minimize);
    let lambda: Vec<_> = (0..generators.len())
        .map(|k| m.add_variable(format!("lambda_{k}"), 0.0, f64::INFINITY, Role::Generic))
        .collect::<Result<_>>()?;
    for (i, &qi) in q.iter().enumerate() {
        let terms = lambda.iter().zip(generators).map(|(&l, g)| (l, g[i]));
        m.add_constraint(format!("coord_{i}"), terms, RowSense::Eq, qi)?;
    }
    m.add_constraint("weights", lambda.iter().map(|&l| (l, 1.0)), RowSense::Eq, 1.0)?;
    match solve(&to_standard_form(&m)?).status {
        SolveStatus::Optimal => Ok(true),
        SolveStatus::Infeasible => Ok(false),
        s => Err(Error::Solver(s)),
    }
}

/// Linear secondary criterion over named variables.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondaryObjective {
    pub sense: ObjectiveSense,
    pub terms: Vec<(String, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedEntry {
    pub point: Vec<f64>,
    pub value: f64,
    /// Position of the point in the source set.
    pub source_index: usize,
    pub best: bool,
    pub worst: bool,
}

/// Points of a vertex set ordered from best to worst secondary value.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedAlternatives {
    pub variables: Vec<String>,
    pub sense: ObjectiveSense,
    pub entries: Vec<RankedEntry>,
}

impl RankedAlternatives {
    pub fn best(&self) -> Option<&RankedEntry> {
        self.entries.first()
    }

    pub fn worst(&self) -> Option<&RankedEntry> {
        self.entries.last()
    }
}

/// Evaluates the secondary objective on every vertex and sorts best first.
/// Values within a relative 1e-9 tie and fall back to lexicographic order.
pub fn rank_alternatives(vs: &VertexSet, secondary: &SecondaryObjective) -> Result<RankedAlternatives> {
    let coeffs: Vec<(usize, f64)> = secondary
        .terms
        .iter()
        .map(|(name, c)| {
            vs.variables
                .iter()
                .position(|v| v == name)
                .map(|i| (i, *c))
                .ok_or_else(|| Error::UnknownVariable(name.clone()))
        })
        .collect::<Result<_>>()?;
    let scores: Vec<f64> = vs.points.iter().map(|p| coeffs.iter().map(|&(i, c)| c * p[i]).sum()).collect();
    rank_by_scores(vs, &scores, secondary.sense)
}

/// Ranks by externally computed per-point scores.
pub fn rank_by_scores(vs: &VertexSet, scores: &[f64], sense: ObjectiveSense) -> Result<RankedAlternatives> {
    if scores.len() != vs.len() {
        return Err(Error::DimensionMismatch { expected: vs.len(), found: scores.len() });
    }
    if let Some(i) = scores.iter().position(|s| s.is_nan()) {
        return Err(Error::NotANumber(format!("score {i}")));
    }
    let mut entries: Vec<RankedEntry> = vs
        .points
        .iter()
        .zip(scores)
        .enumerate()
        .map(|(i, (p, &value))| RankedEntry { point: p.clone(), value, source_index: i, best: false, worst: false })
        .collect();
    entries.sort_by(|a, b| {
        let tie = (a.value - b.value).abs() <= 1e-9 * a.value.abs().max(b.value.abs()).max(1e-300);
        if tie {
            return lex_cmp(&a.point, &b.point, 0.0);
        }
        let ord = a.value.total_cmp(&b.value);
        match sense {
            ObjectiveSense::Minimize => ord,
            ObjectiveSense::Maximize => ord.reverse(),
        }
    });
    if let Some(first) = entries.first_mut() {
        first.best = true;
    }
    if let Some(last) = entries.last_mut() {
        last.worst = true;
    }
    Ok(RankedAlternatives { variables: vs.variables.clone(), sense, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetRelation {
    Equal,
    /// Every point of the first set is in the second, not conversely.
    FirstInSecond,
    /// Every point of the second set is in the first, not conversely.
    SecondInFirst,
    Incomparable,
}

impl SetRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            SetRelation::Equal => "equal",
            SetRelation::FirstInSecond => "a_subset_b",
            SetRelation::SecondInFirst => "b_subset_a",
            SetRelation::Incomparable => "incomparable",
        }
    }
}

/// Compares two point sets under a per-coordinate tolerance.
pub fn compare_projected_sets(a: &VertexSet, b: &VertexSet, dedup_tol: f64) -> SetRelation {
    let a_in_b = a.points.iter().all(|p| b.contains(p, dedup_tol));
    let b_in_a = b.points.iter().all(|p| a.contains(p, dedup_tol));
    match (a_in_b, b_in_a) {
        (true, true) => SetRelation::Equal,
        (true, false) => SetRelation::FirstInSecond,
        (false, true) => SetRelation::SecondInFirst,
        (false, false) => SetRelation::Incomparable,
    }
}
