//! Extreme points of bounded sublevel polytopes.
//!
//! [`enumerate_vertices`] walks the graph of feasible simplex bases
//! breadth-first: from every basis it tries all single pivots that keep the
//! basis primal feasible, so degenerate vertices are left through each of
//! their bases. Bases are mapped to geometric points and merged by
//! coordinates. [`brute_force_vertices`] intersects hyperplanes directly and
//! serves as the independent oracle.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::{solve_square, Insertion, RowReducer};
use crate::model::{LpModel, ObjectiveSense, RowSense};
use crate::simplex::{iterate, phase_one, ray_direction, Canonical, Outcome, PhaseOne};
use crate::standard::to_standard_form;
use crate::sublevel::{make_sublevel_model, SublevelModel, SublevelSpec};
use crate::{DEDUP_TOL, DEFAULT_VERTEX_LIMIT, FEAS_TOL, PIVOT_TOL};

/// Distinct points of a sublevel polytope, sorted lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexSet {
    pub fingerprint: String,
    /// Coordinate labels.
    pub variables: Vec<String>,
    pub sense: ObjectiveSense,
    pub tau: f64,
    pub points: Vec<Vec<f64>>,
    /// Objective value of every point, in the source model's sense.
    pub objectives: Vec<f64>,
    /// Enumeration ran to exhaustion.
    pub complete: bool,
    /// τ was on the infeasible side of the optimum.
    pub provably_empty: bool,
}

/// Lexicographic order where coordinates closer than `tol` tie.
pub fn lex_cmp(a: &[f64], b: &[f64], tol: f64) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() > tol {
            return x.total_cmp(y);
        }
    }
    a.len().cmp(&b.len())
}

pub fn same_point(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

// Removes round-off dust and negative zeros.
fn clean(v: f64) -> f64 {
    if v.abs() < 1e-11 {
        0.0
    } else {
        v
    }
}

impl VertexSet {
    /// Builds a set from raw `(point, objective)` pairs: coordinates are
    /// cleaned, near-duplicates merged (keeping the better objective) and the
    /// result sorted. Marked complete.
    pub fn collect(
        fingerprint: String,
        variables: Vec<String>,
        sense: ObjectiveSense,
        tau: f64,
        raw: impl IntoIterator<Item = (Vec<f64>, f64)>,
        dedup_tol: f64,
    ) -> Self {
        let mut acc = Accumulator::new(dedup_tol, sense);
        for (p, obj) in raw {
            acc.add(p, obj);
        }
        acc.finish(fingerprint, variables, tau)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[f64], tol: f64) -> bool {
        self.points.iter().any(|q| same_point(p, q, tol))
    }
}

struct Accumulator {
    tol: f64,
    sense: ObjectiveSense,
    points: Vec<(Vec<f64>, f64)>,
}

impl Accumulator {
    fn new(tol: f64, sense: ObjectiveSense) -> Self {
        Accumulator { tol, sense, points: Vec::new() }
    }

    /// Returns true when `p` was new.
    fn add(&mut self, p: Vec<f64>, obj: f64) -> bool {
        let p: Vec<f64> = p.into_iter().map(clean).collect();
        if let Some(slot) = self.points.iter_mut().find(|(q, _)| same_point(&p, q, self.tol)) {
            if self.sense.better(obj, slot.1, 0.0) {
                slot.1 = obj;
            }
            return false;
        }
        self.points.push((p, obj));
        true
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn finish(mut self, fingerprint: String, variables: Vec<String>, tau: f64) -> VertexSet {
        let tol = self.tol;
        self.points.sort_by(|a, b| lex_cmp(&a.0, &b.0, tol));
        let (points, objectives) = self.points.into_iter().map(|(p, o)| (p, clean(o))).unzip();
        VertexSet {
            fingerprint,
            variables,
            sense: self.sense,
            tau,
            points,
            objectives,
            complete: true,
            provably_empty: false,
        }
    }
}

/// Knobs for [`enumerate_vertices_with`].
#[derive(Debug, Clone, PartialEq)]
pub struct EnumerateOptions {
    /// Maximum number of distinct vertices to report.
    pub limit: usize,
    pub dedup_tol: f64,
    /// Order in which nonbasic columns are tried at each basis; unlisted
    /// columns follow in index order. Any order yields the same final set.
    pub column_order: Option<Vec<usize>>,
    /// Stop as soon as this many distinct vertices are known.
    pub stop_after: Option<usize>,
    /// Cap on visited bases, to bound work on highly degenerate polytopes.
    pub max_bases: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            limit: DEFAULT_VERTEX_LIMIT,
            dedup_tol: DEDUP_TOL,
            column_order: None,
            stop_after: None,
            max_bases: 500_000,
        }
    }
}

/// All vertices of the sublevel polytope of `model` at the level given by
/// `spec`. The model must be bounded; free variables are rejected with
/// [`Error::Unbounded`].
pub fn enumerate_vertices(model: &LpModel, z_star: f64, spec: SublevelSpec, limit: usize) -> Result<VertexSet> {
    enumerate_vertices_with(model, z_star, spec, &EnumerateOptions { limit, ..Default::default() })
}

pub fn enumerate_vertices_with(
    model: &LpModel,
    z_star: f64,
    spec: SublevelSpec,
    opts: &EnumerateOptions,
) -> Result<VertexSet> {
    if opts.limit == 0 {
        return Err(Error::ZeroLimit);
    }
    let SublevelModel { model: sub, tau, provably_empty, .. } = make_sublevel_model(model, z_star, spec)?;
    if let Some(v) = sub.variables().iter().find(|v| v.is_free()) {
        return Err(Error::Unbounded(v.name.clone()));
    }
    let sense = model.objective().sense;
    let fingerprint = model.fingerprint();
    let names = model.var_names();
    let empty = |acc: Accumulator| {
        let mut vs = acc.finish(fingerprint.clone(), names.clone(), tau);
        vs.provably_empty = provably_empty;
        vs
    };
    let mut acc = Accumulator::new(opts.dedup_tol, sense);

    let sf = to_standard_form(&sub)?;
    if sf.inconsistent {
        return Ok(empty(acc));
    }
    let mut iterations = 0;
    let (canon, start) = match phase_one(Canonical::new(&sf), &mut iterations) {
        PhaseOne::Feasible(c, t) => (c, t),
        PhaseOne::Infeasible => return Ok(empty(acc)),
        PhaseOne::Failed(s) => return Err(Error::Solver(s)),
    };

    // Bounded iff Σ z has a finite maximum over the polytope.
    let mut probe = start.clone();
    probe.set_costs(&vec![-1.0; canon.cols()]);
    match iterate(&mut probe, canon.cols(), &mut iterations) {
        Outcome::Optimal => {}
        Outcome::IterationLimit => return Err(Error::Solver(crate::SolveStatus::IterationLimit)),
        Outcome::Unbounded(j) => {
            let dir = ray_direction(&probe, j);
            let x = sf.to_model_point(&dir[..canon.n_std]);
            let worst = x
                .iter()
                .enumerate()
                .fold((0, 0.0), |acc, (i, v)| if v.abs() > acc.1 { (i, v.abs()) } else { acc })
                .0;
            return Err(Error::Unbounded(names[worst].clone()));
        }
    }

    let n = canon.cols();
    let order: Vec<usize> = match &opts.column_order {
        Some(o) => {
            let mut seen = vec![false; n];
            let mut order: Vec<usize> = o.iter().copied().filter(|&j| j < n && !core::mem::replace(&mut seen[j], true)).collect();
            order.extend((0..n).filter(|&j| !seen[j]));
            order
        }
        None => (0..n).collect(),
    };
    let scale = 1.0 + canon.b.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
    let mut first = start.basis.clone();
    first.sort_unstable();
    let mut visited: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    visited.insert(first.clone());
    queue.push_back(first);
    let mut complete = true;

    while let Some(basis) = queue.pop_front() {
        let Some(tab) = canon.tableau_for_basis(&basis) else { continue };
        let m = tab.t.len();
        if (0..m).any(|r| tab.rhs(r) < -FEAS_TOL * scale) {
            continue;
        }
        let z = tab.point();
        let y = canon.std_point(&z[..canon.n_std]);
        let x = sf.to_model_point(&y);
        let obj = model.objective_value(&x);
        if acc.add(x, obj) && acc.len() > opts.limit {
            acc.points.pop();
            complete = false;
            break;
        }
        if opts.stop_after.is_some_and(|s| acc.len() >= s) {
            complete = false;
            break;
        }
        for &j in &order {
            if tab.is_basic(j) {
                continue;
            }
            let min_ratio = (0..m)
                .filter(|&r| tab.t[r][j] > PIVOT_TOL)
                .map(|r| tab.rhs(r).max(0.0) / tab.t[r][j])
                .fold(f64::INFINITY, f64::min);
            for r in 0..m {
                let a = tab.t[r][j];
                let feasible = if a > PIVOT_TOL {
                    tab.rhs(r).max(0.0) / a <= min_ratio + 1e-9 * (1.0 + min_ratio)
                } else {
                    a < -PIVOT_TOL && tab.rhs(r).abs() <= FEAS_TOL * scale
                };
                if !feasible {
                    continue;
                }
                let mut next: Vec<usize> = basis.iter().map(|&k| if k == tab.basis[r] { j } else { k }).collect();
                next.sort_unstable();
                if visited.len() >= opts.max_bases {
                    complete = false;
                    continue;
                }
                if visited.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }

    let mut vs = acc.finish(fingerprint, names, tau);
    vs.complete = complete;
    vs.provably_empty = provably_empty;
    Ok(vs)
}

/// Outcome of a uniqueness test on a sublevel set.
#[derive(Debug, Clone, PartialEq)]
pub struct UniquenessCertificate {
    /// The sublevel set is exactly one point, proven by exhaustive enumeration.
    pub unique: bool,
    pub tau: f64,
    /// The single point when unique, otherwise the distinct points found.
    pub witnesses: Vec<Vec<f64>>,
    pub complete: bool,
}

/// Enumerates until a second distinct vertex appears. A bounded polytope with
/// one vertex is that vertex, so a complete enumeration with one point
/// certifies a unique minimizer.
pub fn is_unique_minimizer(model: &LpModel, z_star: f64, spec: SublevelSpec) -> Result<UniquenessCertificate> {
    let opts = EnumerateOptions { stop_after: Some(2), ..Default::default() };
    let vs = enumerate_vertices_with(model, z_star, spec, &opts)?;
    Ok(UniquenessCertificate {
        unique: vs.complete && vs.points.len() == 1,
        tau: vs.tau,
        witnesses: vs.points,
        complete: vs.complete,
    })
}

/// Hyperplane-intersection oracle.
///
/// Equality rows are always active; the remaining `n − rank` active
/// hyperplanes are drawn from inequality rows and finite variable bounds.
/// Every nonsingular choice is solved and kept when feasible. Refuses to run
/// above 10⁷ combinations.
pub fn brute_force_vertices(model: &LpModel, z_star: f64, spec: SublevelSpec) -> Result<VertexSet> {
    let SublevelModel { model: sub, tau, provably_empty, .. } = make_sublevel_model(model, z_star, spec)?;
    let n = sub.num_vars();
    let mut acc = Accumulator::new(DEDUP_TOL, model.objective().sense);
    let finish = |acc: Accumulator| {
        let mut vs = acc.finish(model.fingerprint(), model.var_names(), tau);
        vs.provably_empty = provably_empty;
        vs
    };

    let dense = |terms: &[(crate::VarId, f64)]| {
        let mut row = vec![0.0; n];
        for &(v, a) in terms {
            row[v.0] = a;
        }
        row
    };
    let unit = |j: usize| {
        let mut row = vec![0.0; n];
        row[j] = 1.0;
        row
    };

    let mut equalities = Vec::new();
    let mut candidates = Vec::new();
    for c in sub.constraints() {
        let plane = (dense(&c.terms), c.rhs);
        match c.sense {
            RowSense::Eq => equalities.push(plane),
            _ => candidates.push(plane),
        }
    }
    for (j, v) in sub.variables().iter().enumerate() {
        if v.lower == v.upper {
            equalities.push((unit(j), v.lower));
            continue;
        }
        if v.lower.is_finite() {
            candidates.push((unit(j), v.lower));
        }
        if v.upper.is_finite() {
            candidates.push((unit(j), v.upper));
        }
    }

    let mut reducer = RowReducer::new(n, 1e-11);
    let mut active = Vec::new();
    for (row, rhs) in equalities {
        match reducer.insert(&row, rhs) {
            Insertion::Independent => active.push((row, rhs)),
            Insertion::Redundant => {}
            Insertion::Inconsistent => return Ok(finish(acc)),
        }
    }
    let free = n - active.len();
    let total = binomial(candidates.len() as u128, free as u128);
    if total > 10_000_000 {
        return Err(Error::TooManyCombinations(total));
    }

    let (a_eq, b_eq): (Vec<Vec<f64>>, Vec<f64>) = active.into_iter().unzip();
    let mut pick: Vec<usize> = (0..free).collect();
    if free > candidates.len() {
        return Ok(finish(acc));
    }
    loop {
        let mut a = a_eq.clone();
        let mut b = b_eq.clone();
        for &i in &pick {
            a.push(candidates[i].0.clone());
            b.push(candidates[i].1);
        }
        if let Some(x) = solve_square(&a, &b, 1e-10) {
            if sub.max_violation(&x).0 <= FEAS_TOL {
                let obj = model.objective_value(&x);
                acc.add(x, obj);
            }
        }
        if !next_combination(&mut pick, candidates.len()) {
            break;
        }
    }
    Ok(finish(acc))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
        if r > u64::MAX as u128 {
            return r;
        }
    }
    r
}

// Advances `pick` to the next k-subset of 0..n in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
