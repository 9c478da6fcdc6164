//! Exact lower-triangular matrices over the rationals.
//!
//! Every matrix in this crate is the leading block of an infinite
//! lower-triangular matrix, so a `TriMatrix` only stores entries with
//! `j <= i`. Values are immutable; every operation returns a new matrix.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::MatrixError;
use crate::rational::{render, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriMatrix {
    rows: Vec<Vec<Rational>>,
}

/// First entry where two matrices disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for EntryMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}): {} vs {}", self.row, self.col, render(&self.lhs), render(&self.rhs))
    }
}

impl TriMatrix {
    /// Materializes `rule(i, j)` for all `j <= i < order`.
    pub fn from_fn<F>(order: usize, mut rule: F) -> Result<Self, MatrixError>
    where
        F: FnMut(usize, usize) -> Rational,
    {
        Self::try_from_fn(order, |i, j| Ok::<_, MatrixError>(rule(i, j)))
    }

    /// Like [`TriMatrix::from_fn`] but propagates the first failure of the rule.
    pub fn try_from_fn<F, E>(order: usize, mut rule: F) -> Result<Self, E>
    where
        F: FnMut(usize, usize) -> Result<Rational, E>,
        E: From<MatrixError>,
    {
        if order == 0 {
            return Err(MatrixError::EmptyOrder.into());
        }
        let mut rows = Vec::with_capacity(order);
        for i in 0..order {
            let row = (0..=i).map(|j| rule(i, j)).collect::<Result<Vec<_>, E>>()?;
            rows.push(row);
        }
        Ok(TriMatrix { rows })
    }

    /// Builds a matrix from explicit rows; row `i` must hold exactly `i + 1` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        if rows.is_empty() {
            return Err(MatrixError::EmptyOrder);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(MatrixError::Ragged { row: i, found: row.len(), expected: i + 1 });
            }
        }
        Ok(TriMatrix { rows })
    }

    pub fn identity(order: usize) -> Result<Self, MatrixError> {
        Self::from_fn(order, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn diagonal<I>(values: I) -> Result<Self, MatrixError>
    where
        I: IntoIterator<Item = Rational>,
    {
        let values: Vec<Rational> = values.into_iter().collect();
        Self::from_fn(values.len(), |i, j| if i == j { values[i].clone() } else { Rational::zero() })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`; zero above the diagonal.
    ///
    /// Panics if `i` is outside the matrix.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        if j > i {
            Rational::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.order()).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, rhs: &TriMatrix) -> Result<TriMatrix, MatrixError> {
        if self.order() != rhs.order() {
            return Err(MatrixError::OrderMismatch { lhs: self.order(), rhs: rhs.order() });
        }
        Self::from_fn(self.order(), |i, j| {
            (j..=i).fold(Rational::zero(), |acc, k| acc + &self.rows[i][k] * &rhs.rows[k][j])
        })
    }

    /// Matrix-vector product restricted to the matrix order.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, MatrixError> {
        if v.len() != self.order() {
            return Err(MatrixError::OrderMismatch { lhs: self.order(), rhs: v.len() });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }

    /// Exact inverse by forward substitution, column by column.
    pub fn inverse(&self) -> Result<TriMatrix, MatrixError> {
        let n = self.order();
        if let Some(index) = (0..n).find(|&i| self.rows[i][i].is_zero()) {
            return Err(MatrixError::Singular { index });
        }
        let inv_diag: Vec<Rational> = (0..n).map(|i| self.rows[i][i].recip()).collect();
        let mut out: Vec<Vec<Rational>> = (0..n).map(|i| vec![Rational::zero(); i + 1]).collect();
        for j in 0..n {
            out[j][j] = inv_diag[j].clone();
            for i in j + 1..n {
                let s = (j..i).fold(Rational::zero(), |acc, k| acc + &self.rows[i][k] * &out[k][j]);
                out[i][j] = -s * &inv_diag[i];
            }
        }
        Ok(TriMatrix { rows: out })
    }

    /// Top-left `k × k` block.
    pub fn leading_submatrix(&self, k: usize) -> Result<TriMatrix, MatrixError> {
        if k == 0 || k > self.order() {
            return Err(MatrixError::OutOfRange { requested: k, order: self.order() });
        }
        Ok(TriMatrix { rows: self.rows[..k].to_vec() })
    }

    /// Drops the first row and column: entry `(i, j)` of the result is `(i+1, j+1)` here.
    pub fn shifted_minor(&self) -> Result<TriMatrix, MatrixError> {
        if self.order() < 2 {
            return Err(MatrixError::OutOfRange { requested: 0, order: self.order() });
        }
        Ok(TriMatrix {
            rows: self.rows[1..].iter().map(|r| r[1..].to_vec()).collect(),
        })
    }

    /// Entry `(i, j)` multiplied by `base^(i-j)`.
    pub fn scale_by_power(&self, base: &Rational) -> TriMatrix {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| x * num_traits::pow(base.clone(), i - j))
                    .collect()
            })
            .collect();
        TriMatrix { rows }
    }

    pub fn first_difference(&self, other: &TriMatrix) -> Option<EntryMismatch> {
        let n = self.order().max(other.order());
        for i in 0..n {
            for j in 0..=i {
                let a = self.rows.get(i).map(|r| r[j].clone()).unwrap_or_else(Rational::zero);
                let b = other.rows.get(i).map(|r| r[j].clone()).unwrap_or_else(Rational::zero);
                if a != b {
                    return Some(EntryMismatch { row: i, col: j, lhs: a, rhs: b });
                }
            }
        }
        None
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }
}

impl fmt::Debug for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TriMatrix(order {})", self.order())?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(render).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Convenience for tests and golden tables: rows of small integers.
pub fn int_rows(rows: &[&[i64]]) -> TriMatrix {
    TriMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
            .collect(),
    )
    .expect("well-formed triangle")
}
