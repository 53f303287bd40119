//! The LP data model: named variables with bounds and roles, linear rows, and
//! a linear objective.
//!
//! Variable order is declaration order and is observable: projections with a
//! leading count `k` keep the first `k` declared variables.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Index of a variable inside its [`LpModel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub usize);

/// What a variable stands for. Projections can select variables by role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Generation,
    Flow,
    Angle,
    Generic,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Generation => "generation",
            Role::Flow => "flow",
            Role::Angle => "angle",
            Role::Generic => "generic",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        match s {
            "generation" => Some(Role::Generation),
            "flow" => Some(Role::Flow),
            "angle" => Some(Role::Angle),
            "generic" => Some(Role::Generic),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Variable {
    pub name: String,
    /// `f64::NEG_INFINITY` when unbounded below.
    pub lower: f64,
    /// `f64::INFINITY` when unbounded above.
    pub upper: f64,
    pub role: Role,
}

impl Variable {
    pub fn is_free(&self) -> bool {
        self.lower == f64::NEG_INFINITY && self.upper == f64::INFINITY
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowSense {
    Le,
    Eq,
    Ge,
}

impl RowSense {
    pub fn as_str(self) -> &'static str {
        match self {
            RowSense::Le => "<=",
            RowSense::Eq => "=",
            RowSense::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(VarId, f64)>,
    pub sense: RowSense,
    pub rhs: f64,
}

impl Constraint {
    pub fn activity(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|&(v, a)| a * x[v.0]).sum()
    }

    /// Amount by which `x` violates this row (0 when satisfied).
    pub fn violation(&self, x: &[f64]) -> f64 {
        let lhs = self.activity(x);
        match self.sense {
            RowSense::Le => (lhs - self.rhs).max(0.0),
            RowSense::Ge => (self.rhs - lhs).max(0.0),
            RowSense::Eq => (lhs - self.rhs).abs(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectiveSense {
    Minimize,
    Maximize,
}

impl ObjectiveSense {
    /// `+1` for minimization, `-1` for maximization.
    pub fn sign(self) -> f64 {
        match self {
            ObjectiveSense::Minimize => 1.0,
            ObjectiveSense::Maximize => -1.0,
        }
    }

    /// True when `a` is strictly better than `b` by more than `tol`.
    pub fn better(self, a: f64, b: f64, tol: f64) -> bool {
        self.sign() * (b - a) > tol
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ObjectiveSense::Minimize => "min",
            ObjectiveSense::Maximize => "max",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Objective {
    pub sense: ObjectiveSense,
    pub terms: Vec<(VarId, f64)>,
    pub constant: f64,
}

impl Objective {
    pub fn value(&self, x: &[f64]) -> f64 {
        self.constant + self.terms.iter().map(|&(v, a)| a * x[v.0]).sum::<f64>()
    }
}

/// A named violated row or bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub name: String,
    pub amount: f64,
}

/// A linear program over named, ordered variables.
#[derive(Debug, Clone, PartialEq)]
pub struct LpModel {
    variables: Vec<Variable>,
    constraints: Vec<Constraint>,
    objective: Objective,
}

impl LpModel {
    pub fn new(sense: ObjectiveSense) -> Self {
        LpModel {
            variables: Vec::new(),
            constraints: Vec::new(),
            objective: Objective { sense, terms: Vec::new(), constant: 0.0 },
        }
    }

    pub fn add_variable(
        &mut self,
        name: impl Into<String>,
        lower: f64,
        upper: f64,
        role: Role,
    ) -> Result<VarId> {
        let name = name.into();
        if lower.is_nan() || upper.is_nan() {
            return Err(Error::NotANumber(name));
        }
        if lower > upper || lower == f64::INFINITY || upper == f64::NEG_INFINITY {
            return Err(Error::InvalidBounds { name, lower, upper });
        }
        if self.var_index(&name).is_some() {
            return Err(Error::DuplicateVariable(name));
        }
        self.variables.push(Variable { name, lower, upper, role });
        Ok(VarId(self.variables.len() - 1))
    }

    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: impl IntoIterator<Item = (VarId, f64)>,
        sense: RowSense,
        rhs: f64,
    ) -> Result<usize> {
        let name = name.into();
        let terms = self.normalize_terms(&name, terms)?;
        if !rhs.is_finite() {
            return Err(Error::NotANumber(name));
        }
        self.constraints.push(Constraint { name, terms, sense, rhs });
        Ok(self.constraints.len() - 1)
    }

    pub fn set_objective(
        &mut self,
        sense: ObjectiveSense,
        terms: impl IntoIterator<Item = (VarId, f64)>,
        constant: f64,
    ) -> Result<()> {
        let terms = self.normalize_terms("objective", terms)?;
        if !constant.is_finite() {
            return Err(Error::NotANumber("objective".into()));
        }
        self.objective = Objective { sense, terms, constant };
        Ok(())
    }

    /// Replaces the bounds of one variable.
    pub fn set_bounds(&mut self, var: VarId, lower: f64, upper: f64) -> Result<()> {
        let v = self.variables.get_mut(var.0).ok_or(Error::VariableIndex(var.0))?;
        if lower.is_nan() || upper.is_nan() {
            return Err(Error::NotANumber(v.name.clone()));
        }
        if lower > upper {
            return Err(Error::InvalidBounds { name: v.name.clone(), lower, upper });
        }
        v.lower = lower;
        v.upper = upper;
        Ok(())
    }

    // Merges repeated variables, drops exact zeros, sorts by index.
    fn normalize_terms(
        &self,
        owner: &str,
        terms: impl IntoIterator<Item = (VarId, f64)>,
    ) -> Result<Vec<(VarId, f64)>> {
        let mut out: Vec<(VarId, f64)> = Vec::new();
        for (v, a) in terms {
            if v.0 >= self.variables.len() {
                return Err(Error::VariableIndex(v.0));
            }
            if !a.is_finite() {
                return Err(Error::NotANumber(String::from(owner)));
            }
            match out.iter_mut().find(|(w, _)| *w == v) {
                Some((_, b)) => *b += a,
                None => out.push((v, a)),
            }
        }
        out.retain(|&(_, a)| a != 0.0);
        out.sort_by_key(|&(v, _)| v);
        Ok(out)
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn objective(&self) -> &Objective {
        &self.objective
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<VarId> {
        self.variables.iter().position(|v| v.name == name).map(VarId)
    }

    pub fn var_names(&self) -> Vec<String> {
        self.variables.iter().map(|v| v.name.clone()).collect()
    }

    /// Re-checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        if self.variables.is_empty() {
            return Err(Error::EmptyModel);
        }
        for (i, v) in self.variables.iter().enumerate() {
            if v.lower.is_nan() || v.upper.is_nan() {
                return Err(Error::NotANumber(v.name.clone()));
            }
            if v.lower > v.upper {
                return Err(Error::InvalidBounds {
                    name: v.name.clone(),
                    lower: v.lower,
                    upper: v.upper,
                });
            }
            if self.variables[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
        }
        let n = self.variables.len();
        let rows = self.constraints.iter().map(|c| &c.terms);
        for terms in rows.chain(core::iter::once(&self.objective.terms)) {
            if let Some(&(v, _)) = terms.iter().find(|(v, _)| v.0 >= n) {
                return Err(Error::VariableIndex(v.0));
            }
        }
        Ok(())
    }

    /// Objective value in the model's own sense, including the constant.
    pub fn objective_value(&self, x: &[f64]) -> f64 {
        self.objective.value(x)
    }

    /// Every violated row and bound of `x`, with amounts above `tol`.
    pub fn violations(&self, x: &[f64], tol: f64) -> Vec<Violation> {
        let mut out = Vec::new();
        for (v, &xi) in self.variables.iter().zip(x) {
            if v.lower - xi > tol {
                out.push(Violation { name: format!("lower({})", v.name), amount: v.lower - xi });
            }
            if xi - v.upper > tol {
                out.push(Violation { name: format!("upper({})", v.name), amount: xi - v.upper });
            }
        }
        for c in &self.constraints {
            let amount = c.violation(x);
            if amount > tol {
                out.push(Violation { name: c.name.clone(), amount });
            }
        }
        out
    }

    /// Largest violation over all rows and bounds, with the name of the worst
    /// offender. A feasible point gives `(0.0, None)`.
    pub fn max_violation(&self, x: &[f64]) -> (f64, Option<String>) {
        let mut worst = (0.0, None);
        for v in self.violations(x, 0.0) {
            if v.amount > worst.0 {
                worst = (v.amount, Some(v.name));
            }
        }
        worst
    }

    pub fn is_feasible(&self, x: &[f64], tol: f64) -> bool {
        x.len() == self.variables.len() && self.max_violation(x).0 <= tol
    }

    /// Short stable digest of the model's content (names, bounds, rows,
    /// objective).
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        let mut put = |bytes: &[u8]| {
            h.update((bytes.len() as u64).to_le_bytes());
            h.update(bytes);
        };
        for v in &self.variables {
            put(v.name.as_bytes());
            put(&v.lower.to_bits().to_le_bytes());
            put(&v.upper.to_bits().to_le_bytes());
            put(v.role.as_str().as_bytes());
        }
        let put_terms = |put: &mut dyn FnMut(&[u8]), terms: &[(VarId, f64)]| {
            for &(v, a) in terms {
                put(&(v.0 as u64).to_le_bytes());
                put(&a.to_bits().to_le_bytes());
            }
        };
        for c in &self.constraints {
            put(c.name.as_bytes());
            put_terms(&mut put, &c.terms);
            put(c.sense.as_str().as_bytes());
            put(&c.rhs.to_bits().to_le_bytes());
        }
        put(self.objective.sense.as_str().as_bytes());
        put_terms(&mut put, &self.objective.terms);
        put(&self.objective.constant.to_bits().to_le_bytes());
        let digest = h.finalize();
        let mut out = String::with_capacity(16);
        for b in &digest[..8] {
            let _ = write!(out, "{b:02x}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> LpModel {
        let mut m = LpModel::new(ObjectiveSense::Maximize);
        let x = m.add_variable("x", 0.0, 10.0, Role::Generic).unwrap();
        let y = m.add_variable("y", f64::NEG_INFINITY, 5.0, Role::Generic).unwrap();
        m.add_constraint("sum", [(x, 1.0), (y, 1.0)], RowSense::Le, 8.0).unwrap();
        m.set_objective(ObjectiveSense::Maximize, [(x, 2.0), (y, 1.0)], 1.0).unwrap();
        m
    }

    #[test]
    fn rejects_bad_declarations() {
        let mut m = LpModel::new(ObjectiveSense::Minimize);
        m.add_variable("a", 0.0, 1.0, Role::Generic).unwrap();
        assert_eq!(
            m.add_variable("a", 0.0, 1.0, Role::Generic),
            Err(Error::DuplicateVariable("a".into()))
        );
        assert!(matches!(
            m.add_variable("b", 2.0, 1.0, Role::Generic),
            Err(Error::InvalidBounds { .. })
        ));
        assert_eq!(
            m.add_constraint("c", [(VarId(3), 1.0)], RowSense::Le, 0.0),
            Err(Error::VariableIndex(3))
        );
        assert_eq!(LpModel::new(ObjectiveSense::Minimize).validate(), Err(Error::EmptyModel));
    }

    #[test]
    fn merges_repeated_terms() {
        let mut m = LpModel::new(ObjectiveSense::Minimize);
        let a = m.add_variable("a", 0.0, 1.0, Role::Generic).unwrap();
        let b = m.add_variable("b", 0.0, 1.0, Role::Generic).unwrap();
        m.add_constraint("c", [(b, 1.0), (a, 2.0), (b, -1.0), (a, 1.0)], RowSense::Le, 1.0)
            .unwrap();
        assert_eq!(m.constraints()[0].terms, [(a, 3.0)]);
    }

    #[test]
    fn violations_are_named() {
        let m = tiny();
        assert!(m.is_feasible(&[3.0, 5.0], 1e-9));
        let (amount, name) = m.max_violation(&[11.0, 0.0]);
        assert_eq!(name.as_deref(), Some("sum"));
        assert!((amount - 3.0).abs() < 1e-12);
        let v = m.violations(&[-1.0, 0.0], 1e-9);
        assert_eq!(v[0].name, "lower(x)");
        assert!((m.objective_value(&[1.0, 2.0]) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn fingerprint_tracks_content() {
        let a = tiny();
        let mut b = tiny();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_eq!(a.fingerprint().len(), 16);
        b.set_bounds(VarId(0), 0.0, 9.0).unwrap();
        assert_ne!(a.fingerprint(), b.fingerprint());
    }
}
