use alloc::string::String;

use crate::simplex::SolveStatus;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("model has no variables")]
    EmptyModel,
    #[error("variable `{0}` is declared twice")]
    DuplicateVariable(String),
    #[error("variable `{name}` has lower bound {lower} above upper bound {upper}")]
    InvalidBounds { name: String, lower: f64, upper: f64 },
    #[error("reference to undeclared variable `{0}`")]
    UnknownVariable(String),
    #[error("variable index {0} is out of range")]
    VariableIndex(usize),
    #[error("coefficient or bound for `{0}` is not a number")]
    NotANumber(String),
    #[error("relative gap must be a finite value >= 0, got {0}")]
    NegativeGap(f64),
    #[error("box bound must be positive and finite, got {0}")]
    NonPositiveBoxBound(f64),
    #[error("projection keeps {k} leading variables but the source has only {dim}")]
    ProjectionTooLarge { k: usize, dim: usize },
    #[error("expected a point of dimension {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable spaces differ: expected `{expected}`, found `{found}`")]
    VariableMismatch { expected: String, found: String },
    #[error("sublevel polytope is unbounded (free variable `{0}`); call apply_box_bounds before enumerating")]
    Unbounded(String),
    #[error("brute-force oracle would solve {0} systems, above the 10^7 guard")]
    TooManyCombinations(u128),
    #[error("binary variable `{0}` must have bounds inside [0, 1]")]
    NonBinaryBounds(String),
    #[error("vertex limit must be at least 1")]
    ZeroLimit,
    #[error("convex hull needs at least one generator")]
    EmptyHull,
    #[error("solver stopped with status {}", .0.as_str())]
    Solver(SolveStatus),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// Network validation failures. Every variant has a stable [`code`](NetworkError::code).
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NetworkError {
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("bus `{0}` is declared twice")]
    DuplicateBus(String),
    #[error("{context} references undeclared bus `{bus}`")]
    DanglingBus { bus: String, context: String },
    #[error("line {from}->{to} is a self-loop")]
    SelfLoop { from: String, to: String },
    #[error("line {from}->{to} is declared twice")]
    DuplicateLine { from: String, to: String },
    #[error("line {from}->{to} has nonpositive reactance {reactance}")]
    NonPositiveReactance { from: String, to: String, reactance: f64 },
    #[error("line {from}->{to} has nonpositive flow limit {limit}")]
    NonPositiveLimit { from: String, to: String, limit: f64 },
    #[error("bus `{bus}` has more than one {what}")]
    DuplicateEntry { bus: String, what: &'static str },
    #[error("{what} at bus `{bus}` must be finite and >= 0, got {value}")]
    NegativeValue { bus: String, what: &'static str, value: f64 },
    #[error("network is disconnected: bus `{0}` is unreachable from the first bus")]
    Disconnected(String),
}

impl NetworkError {
    pub fn code(&self) -> &'static str {
        match self {
            NetworkError::Schema(_) => "E_SCHEMA",
            NetworkError::DuplicateBus(_) => "E_DUPLICATE_BUS",
            NetworkError::DanglingBus { .. } => "E_DANGLING_BUS",
            NetworkError::SelfLoop { .. } => "E_SELF_LOOP",
            NetworkError::DuplicateLine { .. } => "E_DUPLICATE_LINE",
            NetworkError::NonPositiveReactance { .. } => "E_REACTANCE",
            NetworkError::NonPositiveLimit { .. } => "E_FLOW_LIMIT",
            NetworkError::DuplicateEntry { .. } => "E_DUPLICATE_ENTRY",
            NetworkError::NegativeValue { .. } => "E_NEGATIVE_VALUE",
            NetworkError::Disconnected(_) => "E_DISCONNECTED",
        }
    }
}
