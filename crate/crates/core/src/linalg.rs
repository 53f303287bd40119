//! Small dense linear-algebra helpers.

use alloc::vec;
use alloc::vec::Vec;

/// Solves `a x = b` for square `a` (row-major, `n × n`) by Gaussian
/// elimination with partial pivoting. Returns `None` when a pivot falls below
/// `tol` times the largest entry of its column.
pub fn solve_square(a: &[Vec<f64>], b: &[f64], tol: f64) -> Option<Vec<f64>> {
    let n = b.len();
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    for col in 0..n {
        let (p, best) = (col..n)
            .map(|r| (r, m[r][col].abs()))
            .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        let scale = (0..n).map(|r| a[r][col].abs()).fold(1.0, f64::max);
        if best <= tol * scale {
            return None;
        }
        m.swap(col, p);
        let pivot = m[col][col];
        let (top, rest) = m.split_at_mut(col + 1);
        let prow = &top[col];
        for row in rest.iter_mut() {
            let f = row[col] / pivot;
            if f != 0.0 {
                for (a, b) in row[col..=n].iter_mut().zip(&prow[col..=n]) {
                    *a -= f * b;
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|c| m[r][c] * x[c]).sum();
        x[r] = (m[r][n] - s) / m[r][r];
    }
    Some(x)
}

/// Numerical rank of a set of rows.
pub fn rank(rows: &[Vec<f64>], tol: f64) -> usize {
    let mut r = RowReducer::new(rows.first().map_or(0, Vec::len), tol);
    rows.iter().filter(|row| r.insert(row, 0.0) == Insertion::Independent).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    /// The row increased the rank.
    Independent,
    /// The row and its right-hand side follow from earlier rows.
    Redundant,
    /// The row follows from earlier rows but its right-hand side does not.
    Inconsistent,
}

/// Incremental row echelon form, used to pick a maximal independent subset
/// of equality rows.
#[derive(Debug, Clone)]
pub struct RowReducer {
    width: usize,
    tol: f64,
    // (pivot column, normalized row, rhs)
    rows: Vec<(usize, Vec<f64>, f64)>,
}

impl RowReducer {
    pub fn new(width: usize, tol: f64) -> Self {
        RowReducer { width, tol, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, row: &[f64], rhs: f64) -> Insertion {
        debug_assert_eq!(row.len(), self.width);
        let scale = row.iter().fold(rhs.abs(), |m, a| m.max(a.abs())).max(1.0);
        let mut r = row.to_vec();
        let mut b = rhs;
        for (p, basis, bb) in &self.rows {
            let f = r[*p];
            if f != 0.0 {
                for (x, y) in r.iter_mut().zip(basis) {
                    *x -= f * y;
                }
                b -= f * bb;
            }
        }
        let (p, best) = r
            .iter()
            .enumerate()
            .map(|(i, a)| (i, a.abs()))
            .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= self.tol * scale {
            return if b.abs() <= self.tol * scale {
                Insertion::Redundant
            } else {
                Insertion::Inconsistent
            };
        }
        let pivot = r[p];
        for x in r.iter_mut() {
            *x /= pivot;
        }
        b /= pivot;
        // keep earlier rows reduced against the new pivot column
        for (_, basis, bb) in self.rows.iter_mut() {
            let f = basis[p];
            if f != 0.0 {
                for (x, y) in basis.iter_mut().zip(&r) {
                    *x -= f * y;
                }
                *bb -= f * b;
            }
        }
        self.rows.push((p, r, b));
        Insertion::Independent
    }
}
