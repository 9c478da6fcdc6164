//! Seidel difference arrays.
//!
//! Each array is seeded in column 0 and filled to the right by
//! `h(i, j) = h(i, j-1) - h(i-1, j-1)` for `j <= floor(i/2)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, MatrixError, Result};
use crate::numbers::{bernoulli, genocchi};
use crate::rational::{binom_q, from_big, int, sign, Rational};
use crate::report::IdentityReport;
use crate::stirling::{stirling2, WeightSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeidelVariant {
    /// Seeds from central factorial numbers; the diagonal gives Legendre-Stirling numbers.
    LsFromT,
    /// Seeds from `U`; the diagonal gives `V`.
    VFromU,
    /// The classical triangle for the Genocchi numbers.
    Genocchi,
}

impl SeidelVariant {
    pub const ALL: [SeidelVariant; 3] = [SeidelVariant::LsFromT, SeidelVariant::VFromU, SeidelVariant::Genocchi];

    pub fn name(self) -> &'static str {
        match self {
            SeidelVariant::LsFromT => "ls-from-T",
            SeidelVariant::VFromU => "v-from-U",
            SeidelVariant::Genocchi => "genocchi",
        }
    }
}

impl fmt::Display for SeidelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeidelVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::unknown("seidel variant", s, Self::ALL.iter().map(|v| v.name())))
    }
}

/// Rows are stored up to their last structurally nonzero cell, so row `i`
/// has `floor(i/2) + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeidelArray {
    pub variant: SeidelVariant,
    pub k: usize,
    rows: Vec<Vec<Rational>>,
}

impl SeidelArray {
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Row `i` padded with zeros to `width` entries.
    pub fn padded_row(&self, i: usize, width: usize) -> Vec<Rational> {
        (0..width).map(|j| self.get(i, j)).collect()
    }

    /// Re-checks the difference rule at every cell, independently of construction.
    pub fn difference_rule_holds(&self) -> bool {
        (1..self.rows.len()).all(|i| {
            self.rows[i].len() == i / 2 + 1
                && (1..=i / 2).all(|j| self.get(i, j) == self.get(i, j - 1) - self.get(i - 1, j - 1))
        })
    }
}

/// Builds `rows` rows of the array `variant` with column parameter `k`
/// (ignored for the Genocchi triangle).
pub fn seidel_array(variant: SeidelVariant, k: usize, rows: usize) -> Result<SeidelArray> {
    if rows == 0 {
        return Err(MatrixError::EmptyOrder.into());
    }
    let half = (rows + 1) / 2;
    let seeds: Box<dyn Fn(usize, &[Vec<Rational>]) -> Rational> = match variant {
        SeidelVariant::LsFromT => {
            let t = stirling2(&WeightSpec::central_factorial(), half + 1)?;
            let kq = int(k as i64 + 1);
            Box::new(move |i, _| {
                let v = t.get(i / 2 + 1, k + 1);
                if i % 2 == 0 {
                    v
                } else {
                    &kq * v
                }
            })
        }
        SeidelVariant::VFromU => {
            let u = stirling2(&WeightSpec::u_half_odd(), half)?;
            let factor = int(2 * k as i64 + 1) / int(2);
            Box::new(move |i, _| {
                let v = u.get(i / 2, k);
                if i % 2 == 0 {
                    v
                } else {
                    &factor * v
                }
            })
        }
        SeidelVariant::Genocchi => Box::new(|i, done: &[Vec<Rational>]| match i {
            0 => Rational::one(),
            i if i % 2 == 0 => Rational::zero(),
            i => done[i - 1].iter().fold(Rational::zero(), |acc, x| acc + x),
        }),
    };
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(i / 2 + 1);
        row.push(seeds(i, &out));
        for j in 1..=i / 2 {
            let above = out[i - 1].get(j - 1).cloned().unwrap_or_else(Rational::zero);
            row.push(&row[j - 1] - above);
        }
        out.push(row);
    }
    Ok(SeidelArray { variant, k, rows: out })
}

/// `h(2n, n)`.
pub fn seidel_diagonal(arr: &SeidelArray, n: usize) -> Result<Rational> {
    if 2 * n >= arr.len() {
        return Err(Error::ArrayTooShort { rows: arr.len(), n, needed: 2 * n + 1 });
    }
    Ok(arr.get(2 * n, n))
}

/// `Σ_k C(n, 2k) (-1)^k G_{2n-2k} = [n = 1]` for `1 <= n <= bound`.
pub fn seidel_identity_check(bound: usize) -> Result<IdentityReport> {
    if bound == 0 {
        return Err(Error::InvalidIndex { what: "seidel identity bound", index: 0 });
    }
    IdentityReport::scan("4.17", bound, 1..=bound, |n| {
        let mut sum = Rational::zero();
        for k in 0..=n / 2 {
            sum += binom_q(n as i64, 2 * k as i64) * sign(k) * from_big(genocchi(n - k)?);
        }
        Ok((sum, if n == 1 { Rational::one() } else { Rational::zero() }))
    })
}

/// `Σ_{i=0}^{n+1} C(n+1, i) (n+i+1) B_{n+i} = 0` for `0 <= n <= bound`.
pub fn kaneko_check(bound: usize) -> Result<IdentityReport> {
    IdentityReport::scan("4.48", bound, 0..=bound, |n| {
        let sum = (0..=n + 1).fold(Rational::zero(), |acc, i| {
            acc + binom_q(n as i64 + 1, i as i64) * int((n + i + 1) as i64) * bernoulli(n + i)
        });
        Ok((sum, Rational::zero()))
    })
}

/// The even-index form `Σ_j C(n+1, 2j+1) (2n-2j+1) B_{2n-2j}`, which is the
/// first column of `E1 · A^{-1}` and so equals `C(n+1, 2n)`: one for
/// `n = 0` and `n = 1`, zero afterwards.
pub fn kaneko_even_form_check(bound: usize) -> Result<IdentityReport> {
    IdentityReport::scan("4.48-even", bound, 0..=bound, |n| {
        let ni = n as i64;
        let sum = (0..=n).fold(Rational::zero(), |acc, j| {
            let ji = j as i64;
            acc + binom_q(ni + 1, 2 * ji + 1) * int(2 * ni - 2 * ji + 1) * bernoulli(2 * (n - j))
        });
        Ok((sum, binom_q(ni + 1, 2 * ni)))
    })
}
