//! The generalized Akiyama-Tanigawa algorithm and the summation identities
//! that follow from conjugating a diagonal matrix by a Stirling pair.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{bernoulli, bernoulli_b, genocchi, median_genocchi, tangent};
use crate::rational::{factorial, from_big, int, odd_double_factorial, sign, Rational};
use crate::stirling::{stirling1, stirling2, WeightSpec};
use crate::trimat::TriMatrix;

pub use crate::report::IdentityReport;

/// A row-0 sequence `j -> a(j)`.
#[derive(Clone)]
pub struct Seed {
    name: String,
    a: Arc<dyn Fn(usize) -> Rational + Send + Sync>,
}

impl Seed {
    pub fn new<F>(name: impl Into<String>, a: F) -> Self
    where
        F: Fn(usize) -> Rational + Send + Sync + 'static,
    {
        Seed { name: name.into(), a: Arc::new(a) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn at(&self, j: usize) -> Rational {
        (self.a)(j)
    }

    /// Named seeds for the command line.
    pub fn preset(name: &str) -> Result<Seed> {
        SEED_PRESETS
            .iter()
            .find(|p| p.name == name)
            .map(|p| Seed::new(p.name, p.seed))
            .ok_or_else(|| Error::unknown("seed", name, SEED_PRESETS.iter().map(|p| p.name)))
    }
}

impl std::fmt::Debug for Seed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Seed").field("name", &self.name).finish()
    }
}

pub struct SeedPreset {
    pub name: &'static str,
    pub formula: &'static str,
    pub seed: fn(usize) -> Rational,
}

pub const SEED_PRESETS: &[SeedPreset] = &[
    SeedPreset { name: "index-plus-one", formula: "n+1", seed: |n| int(n as i64 + 1) },
    SeedPreset { name: "index-plus-two", formula: "n+2", seed: |n| int(n as i64 + 2) },
    SeedPreset { name: "square-plus-one", formula: "(n+1)^2", seed: |n| int((n as i64 + 1).pow(2)) },
    SeedPreset { name: "reciprocal", formula: "1/(n+1)", seed: |n| int(n as i64 + 1).recip() },
    SeedPreset { name: "one", formula: "1", seed: |_| Rational::one() },
];

#[derive(Debug, Clone)]
pub struct ATSpec {
    pub weights: WeightSpec,
    pub seed: Seed,
    pub rows: usize,
    pub cols: usize,
}

impl ATSpec {
    pub fn new(weights: WeightSpec, seed: Seed, rows: usize, cols: usize) -> Self {
        ATSpec { weights, seed, rows, cols }
    }
}

/// The `rows × cols` corner of the matrix with `m(0, j) = a(j)` and
/// `m(i, j) = w(j) (m(i-1, j) - m(i-1, j+1))`.
pub fn at_matrix(spec: &ATSpec) -> Result<Vec<Vec<Rational>>> {
    // Row i needs cols + (rows - 1 - i) entries of row i - 1, so row 0 is
    // allocated with cols + rows entries.
    let width = spec.cols + spec.rows;
    let weights: Vec<Rational> = (0..width).map(|j| spec.weights.at(j)).collect();
    if let Some(j) = weights.iter().position(Zero::is_zero) {
        return Err(Error::ZeroWeight { name: spec.weights.name().to_string(), index: j });
    }
    let mut row: Vec<Rational> = (0..width).map(|j| spec.seed.at(j)).collect();
    let mut out = Vec::with_capacity(spec.rows);
    for _ in 0..spec.rows {
        out.push(row[..spec.cols].to_vec());
        row = (0..row.len() - 1).map(|j| &weights[j] * (&row[j] - &row[j + 1])).collect();
    }
    Ok(out)
}

/// The first column of `S^w · diag(a) · s^w` for `n < bound`.
pub fn conjugation_first_column(w: &WeightSpec, diag: &Seed, bound: usize) -> Result<Vec<Rational>> {
    if bound == 0 {
        return Ok(Vec::new());
    }
    let d = TriMatrix::diagonal((0..bound).map(|l| diag.at(l)))?;
    let x = stirling2(w, bound)?.mul(&d)?.mul(&stirling1(w, bound)?)?;
    Ok(x.column(0))
}

/// `c(n) = Σ_j (-1)^j (Π_{i<j} w(i)) S^w(n, j) a(j)`.
pub fn first_column_by_sum(w: &WeightSpec, a: &Seed, bound: usize) -> Result<Vec<Rational>> {
    if bound == 0 {
        return Ok(Vec::new());
    }
    let s = stirling2(w, bound)?;
    let prods = weight_products(w, bound);
    Ok((0..bound)
        .map(|n| (0..=n).fold(Rational::zero(), |acc, j| acc + sign(j) * &prods[j] * s.get(n, j) * a.at(j)))
        .collect())
}

/// `Π_{i<j} w(i)` for `j < len`.
fn weight_products(w: &WeightSpec, len: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(len);
    let mut p = Rational::one();
    for j in 0..len {
        out.push(p.clone());
        p *= w.at(j);
    }
    out
}

/// Recomputes `m(n, k)` from the first column `c` through
/// `m(n,k) = (-1)^k / Π_{l<k} w(l) · Σ_i s^w(k, i) c(n+i)`.
/// `c` must hold at least `n + k + 1` values.
pub fn at_cell_from_first_column(w: &WeightSpec, c: &[Rational], n: usize, k: usize) -> Result<Rational> {
    let s = stirling1(w, k + 1)?;
    let prod = weight_products(w, k + 1)[k].clone();
    let sum = (0..=k).fold(Rational::zero(), |acc, i| acc + s.get(k, i) * &c[n + i]);
    Ok(sign(k) * sum / prod)
}

pub const SUM_IDENTITY_IDS: &[&str] =
    &["6.6", "6.7", "6.8", "6.9", "6.10", "6.11", "6.12", "6.13", "6.14", "6.15", "6.16", "6.17"];

fn fact(n: usize) -> Rational {
    from_big(factorial(n))
}

fn g(n: usize) -> Result<Rational> {
    Ok(from_big(genocchi(n)?))
}

fn double_fact_sq(k: usize) -> Rational {
    let d = from_big(odd_double_factorial(k));
    &d * &d
}

/// Evaluates both sides of the summation identity `id` for every admissible
/// `n <= bound`. Identities whose statement involves `G_{2n}` or `n!(n-1)!`
/// start at `n = 1`.
pub fn verify_sum_identity(id: &str, bound: usize) -> Result<IdentityReport> {
    let size = bound + 2;
    let classical = WeightSpec::stirling();
    let central = WeightSpec::central_factorial();
    match id {
        "6.6" => {
            let s = stirling2(&classical, size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let lhs = (0..=n).fold(Rational::zero(), |acc, j| {
                    acc + s.get(n + 1, j + 1) * sign(j) * fact(j) / int(j as i64 + 1)
                });
                Ok((lhs, bernoulli_b(n)))
            })
        }
        "6.7" => {
            let s = stirling1(&classical, size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let lhs = (0..=n).fold(Rational::zero(), |acc, j| acc + s.get(n + 1, j + 1) * bernoulli_b(j));
                Ok((lhs, sign(n) * fact(n) / int(n as i64 + 1)))
            })
        }
        "6.8" => {
            let t = stirling2(&central, size)?;
            IdentityReport::scan(id, bound, 1..=bound, |n| {
                let rhs = (1..=n).fold(Rational::zero(), |acc, k| {
                    let f = fact(k - 1);
                    acc + sign(k - 1) * t.get(n, k) * int(k as i64) * &f * &f
                });
                Ok((sign(n - 1) * g(n)?, rhs))
            })
        }
        "6.9" => {
            let t = stirling1(&central, size)?;
            IdentityReport::scan(id, bound, 1..=bound, |n| {
                let mut lhs = Rational::zero();
                for k in 1..=n {
                    lhs += sign(n - k) * t.get(n, k) * g(k)?;
                }
                Ok((lhs, fact(n) * fact(n - 1)))
            })
        }
        "6.10" => {
            let t = stirling2(&central, size)?;
            IdentityReport::scan(id, bound, 1..=bound, |n| {
                let rhs = (1..=n).fold(Rational::zero(), |acc, k| {
                    let f = fact(k);
                    acc + sign(k - 1) * t.get(n, k) * &f * &f
                });
                Ok((sign(n - 1) * g(n + 1)?, rhs))
            })
        }
        "6.11" => {
            let t = stirling1(&central, size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let mut lhs = Rational::zero();
                for k in 0..=n {
                    lhs += sign(n - k) * t.get(n, k) * g(k + 1)?;
                }
                let f = fact(n);
                Ok((lhs, &f * &f))
            })
        }
        "6.12" => {
            let ls = stirling2(&WeightSpec::legendre_stirling(), size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
                    let f = fact(k + 1);
                    acc + sign(n - k) * ls.get(n + 1, k + 1) * &f * &f
                });
                Ok((lhs, from_big(median_genocchi(n + 1)?)))
            })
        }
        "6.13" => {
            let s = stirling2(&WeightSpec::shifted_square(2), size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
                    acc + sign(n - k) * s.get(n, k) * fact(k + 1) * fact(k + 2)
                });
                Ok((lhs, g(n + 1)? + g(n + 2)?))
            })
        }
        "6.14" => {
            let s = stirling1(&WeightSpec::shifted_square(2), size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let mut lhs = Rational::zero();
                for k in 0..=n {
                    lhs += sign(n - k) * s.get(n, k) * (g(k + 1)? + g(k + 2)?);
                }
                Ok((lhs, fact(n + 1) * fact(n + 2)))
            })
        }
        "6.15" => {
            let t = stirling2(&central, size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let rhs = (0..=n).fold(Rational::zero(), |acc, j| {
                    let f = fact(j);
                    acc + sign(j) * &f * &f / int(j as i64 + 1) * t.get(n + 1, j + 1)
                });
                Ok((int(2 * n as i64 + 1) * bernoulli(2 * n), rhs))
            })
        }
        "6.16" => {
            let u = stirling2(&WeightSpec::u_half_odd(), size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
                    acc + sign(n - k) * four_pow(n - k) * u.get(n, k) * int(2 * k as i64 + 1) * double_fact_sq(k)
                });
                Ok((lhs, from_big(tangent(n)?)))
            })
        }
        "6.17" => {
            let u = stirling2(&WeightSpec::u_half_odd(), size)?;
            IdentityReport::scan(id, bound, 0..=bound, |n| {
                let lhs = (0..=n).fold(Rational::zero(), |acc, k| {
                    acc + sign(k) * u.get(n, k) * double_fact_sq(k) / (int(2 * k as i64 + 1) * four_pow(k))
                });
                Ok((lhs, bernoulli(2 * n)))
            })
        }
        other => Err(Error::unknown("summation identity", other, SUM_IDENTITY_IDS)),
    }
}

fn four_pow(e: usize) -> Rational {
    from_big(crate::rational::pow2(2 * e))
}

/// The weight/seed pairs whose Akiyama-Tanigawa first column is a known sequence.
pub fn identity_spec(id: &str) -> Option<(WeightSpec, Seed)> {
    let square = || WeightSpec::shifted_square(1);
    let seed = |name: &str| Seed::preset(name).expect("seed preset");
    match id {
        "6.6" => Some((WeightSpec::stirling_shift(), seed("reciprocal"))),
        "6.8" => Some((square(), seed("index-plus-one"))),
        "6.10" => Some((square(), seed("square-plus-one"))),
        "6.15" => Some((square(), seed("reciprocal"))),
        _ => None,
    }
}
