//! Conversion to `min c·y s.t. A y = b, l ≤ y ≤ u` with finite `l`.
//!
//! Each model variable becomes one column (or two, when free): a variable
//! with a finite lower bound maps as is, a variable bounded only above is
//! negated, and a free variable is split into a positive and a negative part.
//! Inequality rows receive a slack column. Maximization is negated and the
//! sign restored by [`StandardForm::model_objective`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::linalg::{Insertion, RowReducer};
use crate::model::{LpModel, ObjectiveSense, RowSense};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ColumnKind {
    /// `x[var] += sign * y`.
    Structural { var: usize, sign: f64 },
    /// Slack of model constraint `row`.
    Slack { row: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Column {
    pub kind: ColumnKind,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StandardForm {
    pub names: Vec<String>,
    pub columns: Vec<Column>,
    /// Dense `rows × columns` equality matrix.
    pub a: Vec<Vec<f64>>,
    pub b: Vec<f64>,
    /// Minimization costs.
    pub c: Vec<f64>,
    pub c0: f64,
    pub sense: ObjectiveSense,
    /// Model constraint index of every kept row.
    pub row_origin: Vec<usize>,
    /// Model equality rows implied by the kept ones.
    pub dropped_rows: Vec<usize>,
    /// Some dropped row contradicts the kept rows, so the model is infeasible.
    pub inconsistent: bool,
}

pub fn to_standard_form(model: &LpModel) -> Result<StandardForm> {
    model.validate()?;
    let sign = model.objective().sense.sign();

    let mut columns = Vec::new();
    // first column of each model variable
    let mut first_col = Vec::with_capacity(model.num_vars());
    for (j, v) in model.variables().iter().enumerate() {
        first_col.push(columns.len());
        let structural = |s: f64, lower: f64, upper: f64| Column {
            kind: ColumnKind::Structural { var: j, sign: s },
            lower,
            upper,
        };
        if v.lower.is_finite() {
            columns.push(structural(1.0, v.lower, v.upper));
        } else if v.upper.is_finite() {
            columns.push(structural(-1.0, -v.upper, f64::INFINITY));
        } else {
            columns.push(structural(1.0, 0.0, f64::INFINITY));
            columns.push(structural(-1.0, 0.0, f64::INFINITY));
        }
    }
    let n_struct = columns.len();
    for (i, con) in model.constraints().iter().enumerate() {
        if con.sense != RowSense::Eq {
            columns.push(Column { kind: ColumnKind::Slack { row: i }, lower: 0.0, upper: f64::INFINITY });
        }
    }
    let n = columns.len();

    let mut c = vec![0.0; n];
    for &(v, coef) in &model.objective().terms {
        for (k, col) in columns[..n_struct].iter().enumerate().skip(first_col[v.0]) {
            match col.kind {
                ColumnKind::Structural { var, sign: s } if var == v.0 => c[k] = sign * coef * s,
                _ => break,
            }
        }
    }

    let mut rows = Vec::new();
    let mut b = Vec::new();
    let mut row_origin = Vec::new();
    let mut dropped_rows = Vec::new();
    let mut inconsistent = false;
    let mut reducer = RowReducer::new(n, 1e-11);
    let mut slack = n_struct;
    for (i, con) in model.constraints().iter().enumerate() {
        let mut row = vec![0.0; n];
        for &(v, coef) in &con.terms {
            for (k, col) in columns[..n_struct].iter().enumerate().skip(first_col[v.0]) {
                match col.kind {
                    ColumnKind::Structural { var, sign: s } if var == v.0 => row[k] = coef * s,
                    _ => break,
                }
            }
        }
        match con.sense {
            RowSense::Le => row[slack] = 1.0,
            RowSense::Ge => row[slack] = -1.0,
            RowSense::Eq => {}
        }
        if con.sense != RowSense::Eq {
            slack += 1;
        }
        match reducer.insert(&row, con.rhs) {
            Insertion::Independent => {
                rows.push(row);
                b.push(con.rhs);
                row_origin.push(i);
            }
            Insertion::Redundant => dropped_rows.push(i),
            Insertion::Inconsistent => {
                dropped_rows.push(i);
                inconsistent = true;
            }
        }
    }

    Ok(StandardForm {
        names: model.var_names(),
        columns,
        a: rows,
        b,
        c,
        c0: sign * model.objective().constant,
        sense: model.objective().sense,
        row_origin,
        dropped_rows,
        inconsistent,
    })
}

impl StandardForm {
    pub fn num_rows(&self) -> usize {
        self.a.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    /// Maps a standard-form point back to model variables.
    pub fn to_model_point(&self, y: &[f64]) -> Vec<f64> {
        let mut x = vec![0.0; self.names.len()];
        for (col, &yk) in self.columns.iter().zip(y) {
            if let ColumnKind::Structural { var, sign } = col.kind {
                x[var] += sign * yk;
            }
        }
        x
    }

    /// Lifts a model point, filling slack columns from the row activities.
    pub fn from_model_point(&self, model: &LpModel, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.columns.len()];
        let mut parts = vec![0usize; self.names.len()];
        for col in &self.columns {
            if let ColumnKind::Structural { var, .. } = col.kind {
                parts[var] += 1;
            }
        }
        for (k, col) in self.columns.iter().enumerate() {
            match col.kind {
                ColumnKind::Structural { var, sign } => {
                    y[k] = if parts[var] == 2 { (sign * x[var]).max(0.0) } else { sign * x[var] };
                }
                ColumnKind::Slack { row } => {
                    let con = &model.constraints()[row];
                    let gap = con.rhs - con.activity(x);
                    y[k] = if con.sense == RowSense::Le { gap } else { -gap };
                }
            }
        }
        y
    }

    /// Minimization objective `c·y + c0`.
    pub fn min_objective(&self, y: &[f64]) -> f64 {
        self.c0 + self.c.iter().zip(y).map(|(a, b)| a * b).sum::<f64>()
    }

    /// Objective in the model's own sense.
    pub fn model_objective(&self, y: &[f64]) -> f64 {
        self.sense.sign() * self.min_objective(y)
    }

    /// Largest violation of `A y = b` and the column bounds.
    pub fn max_violation(&self, y: &[f64]) -> f64 {
        let rows = self.a.iter().zip(&self.b).map(|(row, bi)| {
            (row.iter().zip(y).map(|(a, v)| a * v).sum::<f64>() - bi).abs()
        });
        let bounds = self.columns.iter().zip(y).map(|(c, &v)| (c.lower - v).max(v - c.upper).max(0.0));
        rows.chain(bounds).fold(0.0, f64::max)
    }
}
