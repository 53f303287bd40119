//! Input file formats.
//!
//! Every file is a JSON object whose `schema_version` names its kind:
//!
//! | `schema_version`  | contents                                    |
//! |-------------------|---------------------------------------------|
//! | `aos-net/1`       | transmission network                        |
//! | `aos-lp/1`        | raw linear program                          |
//! | `aos-secondary/1` | linear secondary objective for ranking      |
//! | `aos-scores/1`    | externally computed per-point scores        |
//! | `aos-report/1`    | output of a previous run (see [`crate::report`]) |
//!
//! ## `aos-net/1`
//!
//! ```json
//! {
//!   "schema_version": "aos-net/1",
//!   "buses": ["1", "2", "3"],
//!   "lines": [{"from": "1", "to": "2", "reactance": 1.0, "limit": 100.0}],
//!   "generators": [{"bus": "1", "cost": 50.0, "capacity": 100.0}],
//!   "loads": [{"bus": "3", "demand": 100.0}]
//! }
//! ```
//!
//! * `buses`: non-empty list of unique string ids; declaration order fixes
//!   variable order.
//! * `lines`: `from`/`to` are declared buses, no self-loops, at most one line
//!   per bus pair; `reactance` and `limit` are > 0. Flow is positive from
//!   `from` to `to`, bounded by `±limit`.
//! * `generators`: at most one per bus; `cost` is finite, `capacity` ≥ 0.
//!   Buses without an entry get a generator of capacity 0.
//! * `loads`: at most one per bus, `demand` ≥ 0; absent buses have no load.
//! * The line graph must be connected.
//!
//! ## `aos-lp/1`
//!
//! ```json
//! {
//!   "schema_version": "aos-lp/1",
//!   "variables": [{"name": "x1", "lower": null, "upper": 100.0, "role": "generic"}],
//!   "constraints": [{"name": "c0", "coeffs": {"x1": 1.0}, "sense": "<=", "rhs": 5.0}],
//!   "objective": {"sense": "max", "coeffs": {"x1": 1.0}, "constant": 0.0}
//! }
//! ```
//!
//! `lower`/`upper` may be `null` or omitted for −∞/+∞. `role` is one of
//! `generation`, `flow`, `angle`, `generic` (default). `sense` is `<=`, `=`
//! or `>=`; constraint `name` defaults to `c<index>`; objective `constant`
//! defaults to 0.
//!
//! ## `aos-secondary/1`
//!
//! `{"schema_version": "aos-secondary/1", "sense": "max", "coeffs": {"x2": 1.0}}`
//!
//! ## `aos-scores/1`
//!
//! `{"schema_version": "aos-scores/1", "sense": "max", "scores": [3.0, 1.5]}`,
//! one score per point of the ranked vertex set, in report order.

use std::collections::BTreeMap;

use aos_core::power::{GeneratorData, LineData, LoadData};
use aos_core::{LpModel, Network, NetworkError, ObjectiveSense, Role, RowSense, SecondaryObjective};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const NET_SCHEMA: &str = "aos-net/1";
pub const LP_SCHEMA: &str = "aos-lp/1";
pub const SECONDARY_SCHEMA: &str = "aos-secondary/1";
pub const SCORES_SCHEMA: &str = "aos-scores/1";
pub const REPORT_SCHEMA: &str = "aos-report/1";

/// Failure to read an input file; `code` is a stable identifier.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{code}: {message}")]
pub struct InputError {
    pub code: &'static str,
    pub message: String,
}

impl InputError {
    pub fn schema(message: impl Into<String>) -> Self {
        InputError { code: "E_SCHEMA", message: message.into() }
    }

    pub fn model(e: aos_core::Error) -> Self {
        let code = match &e {
            aos_core::Error::Network(n) => n.code(),
            aos_core::Error::UnknownVariable(_) => "E_UNKNOWN_VARIABLE",
            aos_core::Error::DuplicateVariable(_) => "E_DUPLICATE_VARIABLE",
            aos_core::Error::InvalidBounds { .. } => "E_BOUNDS",
            aos_core::Error::NotANumber(_) => "E_NAN",
            _ => "E_MODEL",
        };
        InputError { code, message: e.to_string() }
    }
}

impl From<NetworkError> for InputError {
    fn from(e: NetworkError) -> Self {
        InputError { code: e.code(), message: e.to_string() }
    }
}

/// The `schema_version` of a JSON document.
pub fn schema_of(text: &str) -> Result<(String, Value), InputError> {
    let v: Value = serde_json::from_str(text).map_err(|e| InputError::schema(format!("not JSON: {e}")))?;
    let version = v
        .get("schema_version")
        .and_then(Value::as_str)
        .ok_or_else(|| InputError::schema("missing schema_version"))?
        .to_string();
    Ok((version, v))
}

fn decode<T: for<'de> Deserialize<'de>>(v: Value, expected: &str) -> Result<T, InputError> {
    match v.get("schema_version").and_then(Value::as_str) {
        Some(s) if s == expected => {}
        Some(s) => return Err(InputError::schema(format!("expected schema_version {expected}, found {s}"))),
        None => return Err(InputError::schema("missing schema_version")),
    }
    serde_json::from_value(v).map_err(|e| InputError::schema(e.to_string()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub schema_version: String,
    pub buses: Vec<String>,
    #[serde(default)]
    pub lines: Vec<LineRecord>,
    #[serde(default)]
    pub generators: Vec<GeneratorRecord>,
    #[serde(default)]
    pub loads: Vec<LoadRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineRecord {
    pub from: String,
    pub to: String,
    pub reactance: f64,
    pub limit: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorRecord {
    pub bus: String,
    pub cost: f64,
    pub capacity: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadRecord {
    pub bus: String,
    pub demand: f64,
}

impl NetworkFile {
    pub fn into_network(self) -> Result<Network, InputError> {
        let lines = self
            .lines
            .into_iter()
            .map(|l| LineData { from: l.from, to: l.to, reactance: l.reactance, limit: l.limit })
            .collect();
        let gens = self
            .generators
            .into_iter()
            .map(|g| GeneratorData { bus: g.bus, cost: g.cost, capacity: g.capacity })
            .collect();
        let loads = self.loads.into_iter().map(|l| LoadData { bus: l.bus, demand: l.demand }).collect();
        Ok(Network::new(self.buses, lines, gens, loads)?)
    }

    pub fn from_network(net: &Network) -> Self {
        let bus = |i: usize| net.buses()[i].clone();
        NetworkFile {
            schema_version: NET_SCHEMA.into(),
            buses: net.buses().to_vec(),
            lines: net
                .lines()
                .iter()
                .map(|l| LineRecord { from: bus(l.from), to: bus(l.to), reactance: l.reactance, limit: l.limit })
                .collect(),
            generators: net
                .generators()
                .iter()
                .enumerate()
                .filter(|(_, g)| g.declared)
                .map(|(i, g)| GeneratorRecord { bus: bus(i), cost: g.cost, capacity: g.capacity })
                .collect(),
            loads: net
                .loads()
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0.0)
                .map(|(i, &d)| LoadRecord { bus: bus(i), demand: d })
                .collect(),
        }
    }
}

pub fn parse_network(text: &str) -> Result<Network, InputError> {
    let (_, v) = schema_of(text)?;
    decode::<NetworkFile>(v, NET_SCHEMA)?.into_network()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "min", alias = "minimize")]
    Min,
    #[serde(rename = "max", alias = "maximize")]
    Max,
}

impl From<Sense> for ObjectiveSense {
    fn from(s: Sense) -> Self {
        match s {
            Sense::Min => ObjectiveSense::Minimize,
            Sense::Max => ObjectiveSense::Maximize,
        }
    }
}

impl From<ObjectiveSense> for Sense {
    fn from(s: ObjectiveSense) -> Self {
        match s {
            ObjectiveSense::Minimize => Sense::Min,
            ObjectiveSense::Maximize => Sense::Max,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=", alias = "==")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LpFile {
    pub schema_version: String,
    pub variables: Vec<VariableRecord>,
    #[serde(default)]
    pub constraints: Vec<ConstraintRecord>,
    pub objective: ObjectiveRecord,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableRecord {
    pub name: String,
    #[serde(default)]
    pub lower: Option<f64>,
    #[serde(default)]
    pub upper: Option<f64>,
    #[serde(default = "generic")]
    pub role: String,
}

fn generic() -> String {
    Role::Generic.as_str().into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstraintRecord {
    #[serde(default)]
    pub name: Option<String>,
    pub coeffs: BTreeMap<String, f64>,
    pub sense: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectiveRecord {
    pub sense: Sense,
    #[serde(default)]
    pub coeffs: BTreeMap<String, f64>,
    #[serde(default)]
    pub constant: f64,
}

fn terms(model: &LpModel, coeffs: &BTreeMap<String, f64>) -> Result<Vec<(aos_core::VarId, f64)>, InputError> {
    coeffs
        .iter()
        .map(|(name, &c)| {
            model
                .var_index(name)
                .map(|v| (v, c))
                .ok_or_else(|| InputError::model(aos_core::Error::UnknownVariable(name.clone())))
        })
        .collect()
}

impl LpFile {
    pub fn into_model(self) -> Result<LpModel, InputError> {
        let sense: ObjectiveSense = self.objective.sense.into();
        let mut m = LpModel::new(sense);
        for v in &self.variables {
            let role = Role::parse(&v.role).ok_or_else(|| InputError::schema(format!("unknown role {:?}", v.role)))?;
            m.add_variable(
                v.name.clone(),
                v.lower.unwrap_or(f64::NEG_INFINITY),
                v.upper.unwrap_or(f64::INFINITY),
                role,
            )
            .map_err(InputError::model)?;
        }
        for (i, c) in self.constraints.iter().enumerate() {
            let t = terms(&m, &c.coeffs)?;
            let sense = match c.sense {
                Relation::Le => RowSense::Le,
                Relation::Eq => RowSense::Eq,
                Relation::Ge => RowSense::Ge,
            };
            let name = c.name.clone().unwrap_or_else(|| format!("c{i}"));
            m.add_constraint(name, t, sense, c.rhs).map_err(InputError::model)?;
        }
        let t = terms(&m, &self.objective.coeffs)?;
        m.set_objective(sense, t, self.objective.constant).map_err(InputError::model)?;
        m.validate().map_err(InputError::model)?;
        Ok(m)
    }

    pub fn from_model(model: &LpModel) -> Self {
        let names = model.var_names();
        let coeffs = |terms: &[(aos_core::VarId, f64)]| terms.iter().map(|&(v, c)| (names[v.0].clone(), c)).collect();
        let finite = |x: f64| x.is_finite().then_some(x);
        LpFile {
            schema_version: LP_SCHEMA.into(),
            variables: model
                .variables()
                .iter()
                .map(|v| VariableRecord {
                    name: v.name.clone(),
                    lower: finite(v.lower),
                    upper: finite(v.upper),
                    role: v.role.as_str().into(),
                })
                .collect(),
            constraints: model
                .constraints()
                .iter()
                .map(|c| ConstraintRecord {
                    name: Some(c.name.clone()),
                    coeffs: coeffs(&c.terms),
                    sense: match c.sense {
                        RowSense::Le => Relation::Le,
                        RowSense::Eq => Relation::Eq,
                        RowSense::Ge => Relation::Ge,
                    },
                    rhs: c.rhs,
                })
                .collect(),
            objective: ObjectiveRecord {
                sense: model.objective().sense.into(),
                coeffs: coeffs(&model.objective().terms),
                constant: model.objective().constant,
            },
        }
    }
}

pub fn parse_lp(text: &str) -> Result<LpModel, InputError> {
    let (_, v) = schema_of(text)?;
    decode::<LpFile>(v, LP_SCHEMA)?.into_model()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SecondaryFile {
    pub schema_version: String,
    pub sense: Sense,
    pub coeffs: BTreeMap<String, f64>,
}

pub fn parse_secondary(text: &str) -> Result<SecondaryObjective, InputError> {
    let (_, v) = schema_of(text)?;
    let f: SecondaryFile = decode(v, SECONDARY_SCHEMA)?;
    Ok(SecondaryObjective { sense: f.sense.into(), terms: f.coeffs.into_iter().collect() })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScoresFile {
    pub schema_version: String,
    pub sense: Sense,
    pub scores: Vec<f64>,
}

pub fn parse_scores(text: &str) -> Result<(ObjectiveSense, Vec<f64>), InputError> {
    let (_, v) = schema_of(text)?;
    let f: ScoresFile = decode(v, SCORES_SCHEMA)?;
    Ok((f.sense.into(), f.scores))
}
