//! Coordinate projections of points and vertex sets.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{LpModel, Role};
use crate::vertex::VertexSet;

/// Which coordinates a projection keeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectionSpec {
    /// The first `k` variables in declaration order.
    Leading(usize),
    /// The named variables, in the listed order.
    Named(Vec<String>),
}

impl ProjectionSpec {
    /// Keeps every variable of `model` whose role is in `roles`, in
    /// declaration order.
    pub fn by_roles(model: &LpModel, roles: &[Role]) -> Self {
        ProjectionSpec::Named(
            model
                .variables()
                .iter()
                .filter(|v| roles.contains(&v.role))
                .map(|v| v.name.clone())
                .collect(),
        )
    }

    /// Source indices of the retained coordinates.
    pub fn indices(&self, names: &[String]) -> Result<Vec<usize>> {
        match self {
            ProjectionSpec::Leading(k) => {
                if *k > names.len() {
                    return Err(Error::ProjectionTooLarge { k: *k, dim: names.len() });
                }
                Ok((0..*k).collect())
            }
            ProjectionSpec::Named(keep) => keep
                .iter()
                .map(|n| names.iter().position(|m| m == n).ok_or_else(|| Error::UnknownVariable(n.clone())))
                .collect(),
        }
    }
}

/// Retained coordinates of `p`, in retained order. `names` labels the
/// coordinates of `p`.
pub fn project_point(p: &[f64], names: &[String], spec: &ProjectionSpec) -> Result<Vec<f64>> {
    if p.len() != names.len() {
        return Err(Error::DimensionMismatch { expected: names.len(), found: p.len() });
    }
    Ok(spec.indices(names)?.into_iter().map(|i| p[i]).collect())
}

/// Projects every point, merges coincident images and re-sorts. A merged
/// point keeps the best objective among its preimages.
pub fn project_set(vs: &VertexSet, spec: &ProjectionSpec, dedup_tol: f64) -> Result<VertexSet> {
    let idx = spec.indices(&vs.variables)?;
    let raw = vs
        .points
        .iter()
        .zip(&vs.objectives)
        .map(|(p, &obj)| (idx.iter().map(|&i| p[i]).collect(), obj));
    let mut out = VertexSet::collect(
        vs.fingerprint.clone(),
        idx.iter().map(|&i| vs.variables[i].clone()).collect(),
        vs.sense,
        vs.tau,
        raw,
        dedup_tol,
    );
    out.complete = vs.complete;
    out.provably_empty = vs.provably_empty;
    Ok(out)
}
