//! `aos-report/1` documents written by the command line.
//!
//! Every report is a JSON object with `schema_version` and `command`. Float
//! fields are written with 12 significant digits; a `null` float means "not
//! defined" (e.g. `z_star` of an infeasible model).

use aos_core::analysis::{ContainmentReport, PairReport, RankedAlternatives};
use aos_core::{SimplexResult, VertexSet};
use serde::{Deserialize, Serialize};

use crate::schema::{Sense, REPORT_SCHEMA};

/// Which model a report was computed on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelInfo {
    /// `dcopf`, `nf`, `cp` or `raw-lp`.
    pub kind: String,
    pub fingerprint: String,
    pub variables: Vec<String>,
}

/// Level at which a sublevel set was taken.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Level {
    RelativeGap { gap: f64 },
    Absolute { tau: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub schema_version: String,
    pub command: String,
    pub model: ModelInfo,
    pub status: String,
    pub z_star: Option<f64>,
    pub x_star: Option<Vec<f64>>,
    pub iterations: usize,
    /// Improving direction when unbounded.
    pub ray: Option<Vec<f64>>,
}

impl SolveReport {
    pub fn new(model: ModelInfo, r: &SimplexResult) -> Self {
        SolveReport {
            schema_version: REPORT_SCHEMA.into(),
            command: "solve".into(),
            model,
            status: r.status.as_str().into(),
            z_star: r.is_optimal().then_some(r.z_star),
            x_star: r.is_optimal().then(|| r.x_star.clone()),
            iterations: r.iterations,
            ray: r.ray.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VertexReport {
    pub schema_version: String,
    pub command: String,
    pub model: ModelInfo,
    pub sense: Sense,
    pub z_star: f64,
    pub level: Level,
    pub tau: f64,
    pub box_bound: f64,
    /// Variables whose infinite bounds were replaced by `±box_bound`.
    pub boxed_variables: Vec<String>,
    /// Retained variables when a projection was applied.
    pub projection: Option<Vec<String>>,
    /// Coordinate names of `points`.
    pub variables: Vec<String>,
    pub count: usize,
    pub points: Vec<Vec<f64>>,
    /// Primary objective at each point (best preimage for projected points).
    pub objectives: Vec<f64>,
    /// False when the vertex limit stopped enumeration early.
    pub complete: bool,
    pub provably_empty: bool,
}

impl VertexReport {
    /// Vertex set carried by the report.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet {
            fingerprint: self.model.fingerprint.clone(),
            variables: self.variables.clone(),
            sense: self.sense.into(),
            tau: self.tau,
            points: self.points.clone(),
            objectives: self.objectives.clone(),
            complete: self.complete,
            provably_empty: self.provably_empty,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub schema_version: String,
    pub command: String,
    pub model: ModelInfo,
    pub z_star: f64,
    pub tau: f64,
    pub enumerated: usize,
    pub brute_force: usize,
    pub agree: bool,
    /// Points found by only one of the two methods.
    pub only_enumerated: Vec<Vec<f64>>,
    pub only_brute_force: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRow {
    pub point: Vec<f64>,
    pub contained: bool,
    pub max_violation: f64,
    /// Most violated row or bound of the relaxed sublevel model.
    pub worst: Option<String>,
    pub violated: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRow {
    pub pair: String,
    pub variables: Vec<String>,
    pub pass: bool,
    pub max_violation: f64,
    pub points: Vec<PointRow>,
}

impl From<&PairReport> for PairRow {
    fn from(p: &PairReport) -> Self {
        PairRow {
            pair: p.label.clone(),
            variables: p.variables.clone(),
            pass: p.pass,
            max_violation: p.max_violation,
            points: p
                .points
                .iter()
                .map(|v| PointRow {
                    point: v.projected.clone(),
                    contained: v.contained,
                    max_violation: v.max_violation,
                    worst: v.worst.clone(),
                    violated: v.violated.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: String,
    pub command: String,
    pub fingerprint: String,
    pub z_star: f64,
    pub level: Level,
    pub tau: f64,
    pub box_bound: f64,
    pub dc_vertices: usize,
    pub nf_vertices: usize,
    pub pass: bool,
    pub max_violation: f64,
    pub pairs: Vec<PairRow>,
}

impl VerifyReport {
    pub fn pairs(report: &ContainmentReport) -> Vec<PairRow> {
        report.pairs.iter().map(PairRow::from).collect()
    }
}

/// One network of a randomized verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkRow {
    pub index: usize,
    pub buses: usize,
    pub lines: usize,
    pub gap: f64,
    pub z_star: f64,
    pub tau: f64,
    pub dc_vertices: usize,
    pub nf_vertices: usize,
    pub pass: bool,
    pub max_violation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomVerifyReport {
    pub schema_version: String,
    pub command: String,
    pub seed: u64,
    /// Networks drawn, including ones whose DC-OPF is infeasible.
    pub drawn: usize,
    /// Networks with a feasible DC-OPF, each checked at every gap.
    pub checked: usize,
    pub gaps: Vec<f64>,
    pub pass: bool,
    pub max_violation: f64,
    pub rows: Vec<NetworkRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankRow {
    pub rank: usize,
    pub point: Vec<f64>,
    pub value: f64,
    /// Position of the point in the ranked vertex set.
    pub source_index: usize,
    pub best: bool,
    pub worst: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankReport {
    pub schema_version: String,
    pub command: String,
    pub fingerprint: String,
    pub tau: f64,
    /// `secondary` for a linear objective, `scores` for an external score file.
    pub criterion: String,
    pub sense: Sense,
    pub variables: Vec<String>,
    pub count: usize,
    pub entries: Vec<RankRow>,
    pub best: Option<RankRow>,
    pub worst: Option<RankRow>,
}

impl RankReport {
    pub fn new(vs: &VertexSet, ranked: &RankedAlternatives, criterion: &str) -> Self {
        let entries: Vec<RankRow> = ranked
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| RankRow {
                rank: i + 1,
                point: e.point.clone(),
                value: e.value,
                source_index: e.source_index,
                best: e.best,
                worst: e.worst,
            })
            .collect();
        RankReport {
            schema_version: REPORT_SCHEMA.into(),
            command: "rank".into(),
            fingerprint: vs.fingerprint.clone(),
            tau: vs.tau,
            criterion: criterion.into(),
            sense: ranked.sense.into(),
            variables: ranked.variables.clone(),
            count: entries.len(),
            best: entries.first().cloned(),
            worst: entries.last().cloned(),
            entries,
        }
    }
}
