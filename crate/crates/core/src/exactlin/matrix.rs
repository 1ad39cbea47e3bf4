//! Dense matrices over the rationals and exact Gaussian elimination.

use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

pub type Vector = Vec<Rational>;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, super::rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Result of a row reduction: the reduced matrix and its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row echelon form. Pivot search takes the first nonzero entry in
/// each column, so the output is deterministic.
pub fn rref(m: &Matrix) -> Echelon {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..a.cols {
        if prow == a.rows {
            break;
        }
        let Some(found) = (prow..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(prow, found);
        let inv = a.get(prow, col).recip();
        for c in col..a.cols {
            let v = a.get(prow, c) * &inv;
            a.set(prow, c, v);
        }
        for r in 0..a.rows {
            if r == prow || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for c in col..a.cols {
                if a.get(prow, c).is_zero() {
                    continue;
                }
                let v = a.get(r, c) - &factor * a.get(prow, c);
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    Echelon { reduced: a, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank()
}

fn kernel_from_echelon(e: &Echelon, cols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = super::rational::one();
            for (r, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.reduced.get(r, free).clone();
            }
            v
        })
        .collect()
}

/// Canonical nullspace basis: one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    kernel_from_echelon(&rref(m), m.cols)
}

/// Solves `a x = b`. Returns `None` when the system is inconsistent; otherwise
/// the particular solution with all free variables set to zero together with
/// a kernel basis.
pub fn solve_affine(a: &Matrix, b: &[Rational]) -> Result<Option<(Vector, Vec<Vector>)>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: b.len(),
        });
    }
    let mut aug = Matrix::zeros(a.rows, a.cols + 1);
    for (r, rhs) in b.iter().enumerate() {
        for c in 0..a.cols {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, a.cols, rhs.clone());
    }
    let e = rref(&aug);
    if e.pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut particular = vec![Rational::zero(); a.cols];
    for (r, &p) in e.pivots.iter().enumerate() {
        particular[p] = e.reduced.get(r, a.cols).clone();
    }
    let coeff = Echelon {
        reduced: e.reduced.clone(),
        pivots: e.pivots.clone(),
    };
    Ok(Some((particular, kernel_from_echelon(&coeff, a.cols))))
}

/// Canonical basis of the span of `vectors`: the nonzero rows of the RREF of
/// the matrix whose rows are the vectors.
pub fn span_basis(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Matrix::zeros(vectors.len(), dim);
    for (r, v) in vectors.iter().enumerate() {
        for (c, x) in v.iter().enumerate() {
            m.set(r, c, x.clone());
        }
    }
    let e = rref(&m);
    (0..e.rank()).map(|r| e.reduced.row(r).to_vec()).collect()
}
