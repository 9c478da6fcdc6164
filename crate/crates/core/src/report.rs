use std::fmt;

use crate::error::Result;
use crate::polyalg::Poly;
use crate::rational::{render, Rational};
use crate::trimat::EntryMismatch;

/// One side of a checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Scalar(Rational),
    Poly(Poly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(x) => write!(f, "{}", render(x)),
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}

impl From<Rational> for Value {
    fn from(x: Rational) -> Self {
        Value::Scalar(x)
    }
}

impl From<Poly> for Value {
    fn from(p: Poly) -> Self {
        Value::Poly(p)
    }
}

/// Where an identity first failed. `k` is the column index for identities
/// indexed by two parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub k: Option<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "n = {}, k = {}: {} != {}", self.n, k, self.lhs, self.rhs),
            None => write!(f, "n = {}: {} != {}", self.n, self.lhs, self.rhs),
        }
    }
}

impl From<EntryMismatch> for Counterexample {
    fn from(m: EntryMismatch) -> Self {
        Counterexample { n: m.row, k: Some(m.col), lhs: m.lhs.into(), rhs: m.rhs.into() }
    }
}

/// Outcome of checking one catalog identity up to a depth bound.
/// `pass` holds exactly when there is no counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub depth: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    /// Number of individual equalities compared.
    pub cases: usize,
}

impl IdentityReport {
    pub fn new(id: &str, depth: usize, cases: usize, counterexample: Option<Counterexample>) -> Self {
        IdentityReport { id: id.to_string(), depth, pass: counterexample.is_none(), counterexample, cases }
    }

    /// Compares `lhs(n) == rhs(n)` for `n` in `range`, stopping at the first failure.
    pub fn scan<I, F, V>(id: &str, depth: usize, range: I, mut case: F) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
        F: FnMut(usize) -> Result<(V, V)>,
        V: Into<Value> + PartialEq,
    {
        let mut cases = 0;
        for n in range {
            let (lhs, rhs) = case(n)?;
            cases += 1;
            if lhs != rhs {
                let cx = Counterexample { n, k: None, lhs: lhs.into(), rhs: rhs.into() };
                return Ok(Self::new(id, depth, cases, Some(cx)));
            }
        }
        Ok(Self::new(id, depth, cases, None))
    }

    /// Two-index variant of [`IdentityReport::scan`] over `0 <= k <= n`.
    pub fn scan_triangle<F, V>(id: &str, depth: usize, ns: std::ops::RangeInclusive<usize>, mut case: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Result<(V, V)>,
        V: Into<Value> + PartialEq,
    {
        let mut cases = 0;
        for n in ns {
            for k in 0..=n {
                let (lhs, rhs) = case(n, k)?;
                cases += 1;
                if lhs != rhs {
                    let cx = Counterexample { n, k: Some(k), lhs: lhs.into(), rhs: rhs.into() };
                    return Ok(Self::new(id, depth, cases, Some(cx)));
                }
            }
        }
        Ok(Self::new(id, depth, cases, None))
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "{:<18} depth {:<3} PASS ({} cases)", self.id, self.depth, self.cases),
            Some(cx) => write!(f, "{:<18} depth {:<3} FAIL at {}", self.id, self.depth, cx),
        }
    }
}
