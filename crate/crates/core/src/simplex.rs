//! Dense two-phase primal simplex.
//!
//! A [`StandardForm`] is shifted to `z = y − l ≥ 0`, and every finite upper
//! bound becomes a row `z_k + w_k = u_k − l_k`. Phase one minimizes the sum of
//! artificial variables, phase two the real cost. Pricing is Dantzig's rule
//! until `50·m` consecutive degenerate pivots, then Bland's rule for the rest
//! of the solve.

use alloc::vec;
use alloc::vec::Vec;

use crate::standard::StandardForm;
use crate::{FEAS_TOL, PIVOT_TOL};

const COST_TOL: f64 = 1e-9;
const MAX_ITERATIONS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// The final point failed verification or a basis became singular.
    NumericFailure,
    IterationLimit,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unbounded => "unbounded",
            SolveStatus::NumericFailure => "numeric_failure",
            SolveStatus::IterationLimit => "iteration_limit",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexResult {
    pub status: SolveStatus,
    /// Point in model variable space; empty unless optimal.
    pub x_star: Vec<f64>,
    /// Objective in the model's own sense; NaN unless optimal.
    pub z_star: f64,
    /// Basic columns of the final tableau, in canonical-form numbering.
    pub basis: Vec<usize>,
    pub iterations: usize,
    /// Improving direction in model space when unbounded.
    pub ray: Option<Vec<f64>>,
}

impl SimplexResult {
    fn failed(status: SolveStatus, iterations: usize) -> Self {
        SimplexResult { status, x_star: Vec::new(), z_star: f64::NAN, basis: Vec::new(), iterations, ray: None }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }
}

/// `A z = b, z ≥ 0` built from a standard form. Columns `0..n_std` are the
/// shifted standard-form columns, the rest are upper-bound slacks.
#[derive(Debug, Clone)]
pub(crate) struct Canonical {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    pub c: Vec<f64>,
    pub n_std: usize,
    pub shift: Vec<f64>,
    /// Rows `0..n_sf_rows` come from the standard form.
    pub n_sf_rows: usize,
}

impl Canonical {
    pub fn new(sf: &StandardForm) -> Self {
        let n_std = sf.num_cols();
        let bounded: Vec<usize> = (0..n_std).filter(|&k| sf.columns[k].upper.is_finite()).collect();
        let n = n_std + bounded.len();
        let shift: Vec<f64> = sf.columns.iter().map(|c| c.lower).collect();
        let mut a = Vec::with_capacity(sf.num_rows() + bounded.len());
        let mut b = Vec::with_capacity(a.capacity());
        for (row, &bi) in sf.a.iter().zip(&sf.b) {
            let mut r = row.clone();
            let shifted = bi - r.iter().zip(&shift).map(|(x, l)| x * l).sum::<f64>();
            r.resize(n, 0.0);
            a.push(r);
            b.push(shifted);
        }
        for (i, &k) in bounded.iter().enumerate() {
            let mut r = vec![0.0; n];
            r[k] = 1.0;
            r[n_std + i] = 1.0;
            a.push(r);
            b.push(sf.columns[k].upper - sf.columns[k].lower);
        }
        let mut c = sf.c.clone();
        c.resize(n, 0.0);
        Canonical { a, b, c, n_std, shift, n_sf_rows: sf.num_rows() }
    }

    pub fn rows(&self) -> usize {
        self.a.len()
    }

    pub fn cols(&self) -> usize {
        self.c.len()
    }

    /// Standard-form point of a canonical point.
    pub fn std_point(&self, z: &[f64]) -> Vec<f64> {
        self.shift.iter().zip(z).map(|(l, v)| l + v).collect()
    }

    /// Tableau `B⁻¹[A | b]` for the given basic columns, or `None` when they
    /// do not form a basis.
    pub fn tableau_for_basis(&self, basis: &[usize]) -> Option<Tableau> {
        let m = self.rows();
        if basis.len() != m {
            return None;
        }
        let mut tab = Tableau::from_rows(&self.a, &self.b, self.cols());
        let mut assigned = vec![false; m];
        for &j in basis {
            let scale = (0..m).map(|r| self.a[r][j].abs()).fold(1.0, f64::max);
            let (r, best) = (0..m)
                .filter(|&r| !assigned[r])
                .map(|r| (r, tab.t[r][j].abs()))
                .fold((usize::MAX, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if r == usize::MAX || best <= PIVOT_TOL * scale {
                return None;
            }
            tab.pivot(r, j);
            assigned[r] = true;
        }
        Some(tab)
    }
}

/// Dense simplex tableau. Row `r` expresses basic column `basis[r]`; the last
/// entry of every row is its right-hand side.
#[derive(Debug, Clone)]
pub(crate) struct Tableau {
    pub t: Vec<Vec<f64>>,
    pub basis: Vec<usize>,
    /// Reduced costs, last entry is minus the objective value.
    pub d: Vec<f64>,
}

impl Tableau {
    fn from_rows(a: &[Vec<f64>], b: &[f64], cols: usize) -> Self {
        let t = a
            .iter()
            .zip(b)
            .map(|(row, &bi)| {
                let mut r = row.clone();
                r.push(bi);
                r
            })
            .collect();
        Tableau { t, basis: vec![usize::MAX; a.len()], d: vec![0.0; cols + 1] }
    }

    pub fn cols(&self) -> usize {
        self.d.len() - 1
    }

    pub fn rhs(&self, r: usize) -> f64 {
        self.t[r][self.cols()]
    }

    pub fn pivot(&mut self, r: usize, j: usize) {
        let p = self.t[r][j];
        for v in self.t[r].iter_mut() {
            *v /= p;
        }
        self.t[r][j] = 1.0;
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            let f = row[j];
            if i != r && f != 0.0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
                row[j] = 0.0;
            }
        }
        let f = self.d[j];
        if f != 0.0 {
            for (x, y) in self.d.iter_mut().zip(&pivot_row) {
                *x -= f * y;
            }
            self.d[j] = 0.0;
        }
        self.basis[r] = j;
    }

    /// Loads cost vector `c` (length ≥ number of columns, extra ignored) and
    /// prices out the basis.
    pub fn set_costs(&mut self, c: &[f64]) {
        let n = self.cols();
        self.d = c[..n].to_vec();
        self.d.push(0.0);
        for (r, &j) in self.basis.iter().enumerate() {
            let cj = self.d[j];
            if cj != 0.0 {
                for (x, y) in self.d.iter_mut().zip(&self.t[r]) {
                    *x -= cj * y;
                }
            }
        }
    }

    /// Current values of all columns.
    pub fn point(&self) -> Vec<f64> {
        let mut z = vec![0.0; self.cols()];
        for (r, &j) in self.basis.iter().enumerate() {
            if j < z.len() {
                z[j] = self.rhs(r).max(0.0);
            }
        }
        z
    }

    pub fn is_basic(&self, j: usize) -> bool {
        self.basis.contains(&j)
    }
}

pub(crate) enum Outcome {
    Optimal,
    Unbounded(usize),
    IterationLimit,
}

/// Runs primal simplex on a feasible tableau over columns `0..allowed`.
pub(crate) fn iterate(tab: &mut Tableau, allowed: usize, iterations: &mut usize) -> Outcome {
    let m = tab.t.len();
    let stall_limit = 50 * m.max(1);
    let mut degenerate_run = 0;
    let mut bland = false;
    loop {
        if *iterations >= MAX_ITERATIONS {
            return Outcome::IterationLimit;
        }
        let entering = if bland {
            (0..allowed).find(|&j| tab.d[j] < -COST_TOL && !tab.is_basic(j))
        } else {
            (0..allowed)
                .filter(|&j| tab.d[j] < -COST_TOL && !tab.is_basic(j))
                .min_by(|&a, &b| tab.d[a].total_cmp(&tab.d[b]))
        };
        let Some(j) = entering else {
            return Outcome::Optimal;
        };
        let mut leave: Option<(usize, f64)> = None;
        for r in 0..m {
            let a = tab.t[r][j];
            if a <= PIVOT_TOL {
                continue;
            }
            let ratio = tab.rhs(r).max(0.0) / a;
            leave = match leave {
                None => Some((r, ratio)),
                Some((s, best)) => {
                    let tie = (ratio - best).abs() <= 1e-12 * (1.0 + best.abs());
                    let take = if ratio < best && !tie {
                        true
                    } else if tie {
                        if bland {
                            tab.basis[r] < tab.basis[s]
                        } else {
                            a > tab.t[s][j]
                        }
                    } else {
                        false
                    };
                    if take { Some((r, ratio)) } else { Some((s, best)) }
                }
            };
        }
        let Some((r, ratio)) = leave else {
            return Outcome::Unbounded(j);
        };
        if ratio <= 1e-12 {
            degenerate_run += 1;
            if degenerate_run >= stall_limit {
                bland = true;
            }
        } else {
            degenerate_run = 0;
        }
        tab.pivot(r, j);
        *iterations += 1;
    }
}

/// Result of phase one on a canonical form.
pub(crate) enum PhaseOne {
    /// A feasible tableau over the (possibly row-reduced) canonical form.
    Feasible(Canonical, Tableau),
    Infeasible,
    Failed(SolveStatus),
}

pub(crate) fn phase_one(mut canon: Canonical, iterations: &mut usize) -> PhaseOne {
    let m = canon.rows();
    let n = canon.cols();
    // Upper-bound rows start with their own slack basic; standard-form rows
    // get an artificial column each.
    let n_art = canon.n_sf_rows;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for r in 0..m {
        let flip = r < n_art && canon.b[r] < 0.0;
        let s = if flip { -1.0 } else { 1.0 };
        let mut row: Vec<f64> = canon.a[r].iter().map(|v| s * v).collect();
        row.resize(n + n_art, 0.0);
        if r < n_art {
            row[n + r] = 1.0;
        }
        rows.push(row);
        rhs.push(s * canon.b[r]);
    }
    let mut tab = Tableau::from_rows(&rows, &rhs, n + n_art);
    for r in 0..m {
        tab.basis[r] = if r < n_art { n + r } else { canon.n_std + (r - n_art) };
    }
    let mut cost = vec![0.0; n + n_art];
    for c in cost[n..].iter_mut() {
        *c = 1.0;
    }
    tab.set_costs(&cost);
    match iterate(&mut tab, n + n_art, iterations) {
        Outcome::Optimal => {}
        Outcome::IterationLimit => return PhaseOne::Failed(SolveStatus::IterationLimit),
        // phase one is bounded below by zero
        Outcome::Unbounded(_) => return PhaseOne::Failed(SolveStatus::NumericFailure),
    }
    let scale = 1.0 + canon.b.iter().fold(0.0, |m: f64, v| m.max(v.abs()));
    if -tab.d[n + n_art] > FEAS_TOL * scale {
        return PhaseOne::Infeasible;
    }

    // Drive artificials out of the basis; drop rows that are combinations of
    // the others. `art_row[k]` is the current canonical row of artificial k.
    let mut art_row: Vec<Option<usize>> = (0..n_art).map(Some).collect();
    let mut r = 0;
    while r < tab.t.len() {
        if tab.basis[r] < n {
            r += 1;
            continue;
        }
        let best = (0..n)
            .filter(|&j| !tab.is_basic(j))
            .map(|j| (j, tab.t[r][j].abs()))
            .fold((usize::MAX, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best.0 != usize::MAX && best.1 > PIVOT_TOL {
            tab.pivot(r, best.0);
            r += 1;
            continue;
        }
        // Row r is zero on every real column: some standard-form row with a
        // nonzero multiplier in it is implied by the rest.
        let (k, weight) = (0..n_art)
            .filter(|&k| art_row[k].is_some())
            .map(|k| (k, tab.t[r][n + k].abs()))
            .fold((usize::MAX, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if k == usize::MAX || weight <= PIVOT_TOL {
            return PhaseOne::Failed(SolveStatus::NumericFailure);
        }
        let origin = art_row[k].take().unwrap();
        for slot in art_row.iter_mut().flatten() {
            if *slot > origin {
                *slot -= 1;
            }
        }
        canon.a.remove(origin);
        canon.b.remove(origin);
        canon.n_sf_rows -= 1;
        tab.t.remove(r);
        tab.basis.remove(r);
        for row in tab.t.iter_mut() {
            row[n + k] = 0.0;
        }
    }

    // Drop artificial columns.
    for row in tab.t.iter_mut() {
        let b = row[n + n_art];
        row.truncate(n);
        row.push(b);
    }
    tab.d.truncate(n);
    tab.d.push(0.0);
    PhaseOne::Feasible(canon, tab)
}

/// Canonical-space direction of the ray opened by entering column `j`.
pub(crate) fn ray_direction(tab: &Tableau, j: usize) -> Vec<f64> {
    let mut dir = vec![0.0; tab.cols()];
    dir[j] = 1.0;
    for (r, &k) in tab.basis.iter().enumerate() {
        dir[k] = -tab.t[r][j];
    }
    dir
}

/// Solves the standard form. Never reports `Optimal` for a point that fails
/// the feasibility check.
pub fn solve(sf: &StandardForm) -> SimplexResult {
    if sf.inconsistent {
        return SimplexResult::failed(SolveStatus::Infeasible, 0);
    }
    let mut iterations = 0;
    let (canon, mut tab) = match phase_one(Canonical::new(sf), &mut iterations) {
        PhaseOne::Feasible(c, t) => (c, t),
        PhaseOne::Infeasible => return SimplexResult::failed(SolveStatus::Infeasible, iterations),
        PhaseOne::Failed(s) => return SimplexResult::failed(s, iterations),
    };
    tab.set_costs(&canon.c);
    match iterate(&mut tab, canon.cols(), &mut iterations) {
        Outcome::Optimal => {}
        Outcome::IterationLimit => return SimplexResult::failed(SolveStatus::IterationLimit, iterations),
        Outcome::Unbounded(j) => {
            let dir = ray_direction(&tab, j);
            let ray = sf.to_model_point(&dir[..canon.n_std]);
            let mut out = SimplexResult::failed(SolveStatus::Unbounded, iterations);
            out.ray = Some(ray);
            return out;
        }
    }
    let z = tab.point();
    let y = canon.std_point(&z[..canon.n_std]);
    let scale = 1.0 + sf.b.iter().chain(sf.columns.iter().map(|c| &c.lower)).fold(0.0, |m: f64, v| m.max(v.abs()));
    if sf.max_violation(&y) > FEAS_TOL * scale {
        return SimplexResult::failed(SolveStatus::NumericFailure, iterations);
    }
    let mut basis = tab.basis.clone();
    basis.sort_unstable();
    SimplexResult {
        status: SolveStatus::Optimal,
        z_star: sf.model_objective(&y),
        x_star: sf.to_model_point(&y),
        basis,
        iterations,
        ray: None,
    }
}
