//! Sublevel-set models and box bounds.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{LpModel, ObjectiveSense, RowSense};

/// Name of the row added by [`make_sublevel_model`].
pub const SUBLEVEL_ROW: &str = "sublevel";

/// How the level value τ is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SublevelSpec {
    /// τ given directly, in the objective's own units.
    Absolute(f64),
    /// τ at a relative distance ε from the optimum.
    RelativeGap(f64),
}

impl SublevelSpec {
    /// Resolves τ for an optimum `z_star` of a problem with the given sense.
    ///
    /// A relative gap ε gives `z* + ε·max(1, |z*|)` when minimizing and
    /// `z* − ε·max(1, |z*|)` when maximizing.
    pub fn resolve(self, z_star: f64, sense: ObjectiveSense) -> Result<f64> {
        match self {
            SublevelSpec::Absolute(tau) => {
                if tau.is_nan() {
                    return Err(Error::NotANumber("tau".into()));
                }
                Ok(tau)
            }
            SublevelSpec::RelativeGap(eps) => {
                if eps < 0.0 || !eps.is_finite() {
                    return Err(Error::NegativeGap(eps));
                }
                Ok(z_star + sense.sign() * eps * z_star.abs().max(1.0))
            }
        }
    }
}

/// A model restricted to its sublevel set.
#[derive(Debug, Clone, PartialEq)]
pub struct SublevelModel {
    pub model: LpModel,
    pub tau: f64,
    /// τ lies strictly on the wrong side of `z*`, so the set is empty.
    pub provably_empty: bool,
    /// Index of the added row in `model.constraints()`.
    pub cut: usize,
}

/// Adds the single row `objective ≤ τ` (or `≥ τ` when maximizing). Variables
/// and the objective itself are left untouched.
pub fn make_sublevel_model(model: &LpModel, z_star: f64, spec: SublevelSpec) -> Result<SublevelModel> {
    model.validate()?;
    let objective = model.objective();
    let tau = spec.resolve(z_star, objective.sense)?;
    let sense = match objective.sense {
        ObjectiveSense::Minimize => RowSense::Le,
        ObjectiveSense::Maximize => RowSense::Ge,
    };
    let slack = 1e-9 * z_star.abs().max(1.0);
    let provably_empty = objective.sense.better(tau, z_star, slack);
    let mut out = model.clone();
    let cut = out.add_constraint(
        SUBLEVEL_ROW,
        objective.terms.iter().copied(),
        sense,
        tau - objective.constant,
    )?;
    Ok(SublevelModel { model: out, tau, provably_empty, cut })
}

/// A model whose infinite bounds were replaced by `±M`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxedModel {
    pub model: LpModel,
    pub bound: f64,
    /// Names of the variables that received at least one new bound.
    pub modified: Vec<String>,
}

pub fn apply_box_bounds(model: &LpModel, bound: f64) -> Result<BoxedModel> {
    if bound <= 0.0 || !bound.is_finite() {
        return Err(Error::NonPositiveBoxBound(bound));
    }
    let mut out = model.clone();
    let mut modified = Vec::new();
    for (i, v) in model.variables().iter().enumerate() {
        let lower = if v.lower == f64::NEG_INFINITY { -bound } else { v.lower };
        let upper = if v.upper == f64::INFINITY { bound } else { v.upper };
        if lower != v.lower || upper != v.upper {
            // A one-sided bound beyond M keeps the original finite side.
            out.set_bounds(crate::VarId(i), lower.min(upper), upper.max(lower))?;
            modified.push(v.name.clone());
        }
    }
    Ok(BoxedModel { model: out, bound, modified })
}
