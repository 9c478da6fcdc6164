//! Generalized Stirling numbers driven by an arbitrary weight sequence.
//!
//! For a weight sequence `w`, the second kind satisfies
//! `S(n,k) = S(n-1,k-1) + w(k) S(n-1,k)` and the first kind
//! `s(n,k) = s(n-1,k-1) - w(n-1) s(n-1,k)`. The two triangles are inverse
//! to each other for every `w`, which is why weights are not required to be
//! positive or increasing here.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::Poly;
use crate::rational::{frac, int, Rational};
use crate::report::IdentityReport;
use crate::trimat::TriMatrix;

type WeightFn = dyn Fn(usize) -> Rational + Send + Sync;

/// A named, total weight sequence `n ↦ w(n)`.
#[derive(Clone)]
pub struct WeightSpec {
    name: String,
    w: Arc<WeightFn>,
}

impl WeightSpec {
    pub fn new<F>(name: impl Into<String>, w: F) -> Self
    where
        F: Fn(usize) -> Rational + Send + Sync + 'static,
    {
        WeightSpec { name: name.into(), w: Arc::new(w) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn at(&self, n: usize) -> Rational {
        (self.w)(n)
    }

    /// Looks up one of the canonical presets, see [`PRESETS`].
    pub fn preset(name: &str) -> Result<WeightSpec> {
        PRESETS
            .iter()
            .find(|p| p.name == name)
            .map(|p| WeightSpec::new(p.name, p.weight))
            .ok_or_else(|| Error::unknown("weight preset", name, PRESETS.iter().map(|p| p.name)))
    }

    /// A preset name, or `square+K` for `w(n) = (n + K)²`.
    pub fn lookup(name: &str) -> Result<WeightSpec> {
        if let Some(offset) = name.strip_prefix("square+").and_then(|k| k.parse().ok()) {
            return Ok(Self::shifted_square(offset));
        }
        Self::preset(name).map_err(|_| {
            Error::unknown("weight", name, PRESETS.iter().map(|p| p.name).chain(std::iter::once("square+<k>")))
        })
    }

    /// `w(n) = n`: classical Stirling numbers.
    pub fn stirling() -> Self {
        Self::preset("stirling").unwrap()
    }

    /// `w(n) = n + 1`: classical Stirling numbers with first row and column removed.
    pub fn stirling_shift() -> Self {
        Self::preset("stirling-shift").unwrap()
    }

    /// `w(n) = n²`: central factorial numbers.
    pub fn central_factorial() -> Self {
        Self::preset("central-factorial").unwrap()
    }

    /// `w(n) = n(n+1)`: Legendre-Stirling numbers.
    pub fn legendre_stirling() -> Self {
        Self::preset("legendre-stirling").unwrap()
    }

    /// `w(n) = ((2n+1)/2)²`.
    pub fn u_half_odd() -> Self {
        Self::preset("u-half-odd").unwrap()
    }

    /// `w(n) = (2n-1)(2n+1)/4`; note `w(0) = -1/4`.
    pub fn v_product_quarter() -> Self {
        Self::preset("v-product-quarter").unwrap()
    }

    /// `w(n) = (n + offset)²`.
    pub fn shifted_square(offset: usize) -> Self {
        WeightSpec::new(format!("square+{offset}"), move |n| {
            let v = (n + offset) as i64;
            int(v * v)
        })
    }
}

impl fmt::Debug for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head: Vec<String> = (0..4).map(|n| crate::rational::render(&self.at(n))).collect();
        write!(f, "WeightSpec({}: {}, …)", self.name, head.join(", "))
    }
}

pub struct WeightPreset {
    pub name: &'static str,
    pub formula: &'static str,
    pub weight: fn(usize) -> Rational,
}

pub const PRESETS: &[WeightPreset] = &[
    WeightPreset { name: "stirling", formula: "n", weight: |n| int(n as i64) },
    WeightPreset { name: "stirling-shift", formula: "n+1", weight: |n| int(n as i64 + 1) },
    WeightPreset { name: "central-factorial", formula: "n^2", weight: |n| int((n * n) as i64) },
    WeightPreset { name: "legendre-stirling", formula: "n(n+1)", weight: |n| int((n * (n + 1)) as i64) },
    WeightPreset {
        name: "u-half-odd",
        formula: "((2n+1)/2)^2",
        weight: |n| {
            let m = 2 * n as i64 + 1;
            frac(m * m, 4)
        },
    },
    WeightPreset {
        name: "v-product-quarter",
        formula: "(2n-1)(2n+1)/4",
        weight: |n| {
            let n = n as i64;
            frac((2 * n - 1) * (2 * n + 1), 4)
        },
    },
];

/// `ŵ(n) = w(n+1)`.
pub fn shift_weight(w: &WeightSpec) -> WeightSpec {
    let inner = w.clone();
    WeightSpec::new(format!("{}>>1", w.name), move |n| inner.at(n + 1))
}

/// Second-kind triangle `S^w(n, k)` for `0 <= k <= n < order`.
pub fn stirling2(w: &WeightSpec, order: usize) -> Result<TriMatrix> {
    let weights: Vec<Rational> = (0..order).map(|k| w.at(k)).collect();
    triangle(order, |prev, _, k| {
        let left = if k == 0 { Rational::zero() } else { prev[k - 1].clone() };
        let up = prev.get(k).cloned().unwrap_or_else(Rational::zero);
        left + &weights[k] * up
    })
}

/// First-kind triangle `s^w(n, k)` for `0 <= k <= n < order`.
pub fn stirling1(w: &WeightSpec, order: usize) -> Result<TriMatrix> {
    let weights: Vec<Rational> = (0..order).map(|k| w.at(k)).collect();
    triangle(order, |prev, n, k| {
        let left = if k == 0 { Rational::zero() } else { prev[k - 1].clone() };
        let up = prev.get(k).cloned().unwrap_or_else(Rational::zero);
        left - &weights[n - 1] * up
    })
}

/// Builds row `n` from row `n-1`, with row 0 equal to `[1]`.
fn triangle<F>(order: usize, mut cell: F) -> Result<TriMatrix>
where
    F: FnMut(&[Rational], usize, usize) -> Rational,
{
    if order == 0 {
        return Err(crate::error::MatrixError::EmptyOrder.into());
    }
    let mut rows = vec![vec![Rational::one()]];
    for n in 1..order {
        let row: Vec<Rational> = (0..=n).map(|k| cell(&rows[n - 1], n, k)).collect();
        rows.push(row);
    }
    Ok(TriMatrix::from_rows(rows)?)
}

/// `Π_{j<n} (x - w(j))` as a polynomial in `x`.
pub fn falling_product(w: &WeightSpec, n: usize) -> Poly {
    (0..n).fold(Poly::constant(Rational::one()), |acc, j| {
        &acc * &Poly::new(vec![-w.at(j), Rational::one()])
    })
}

/// Checks row `n` of both triangles against their defining polynomial identities:
/// `Σ_k s^w(n,k) x^k = Π_{j<n}(x - w(j))` and `Σ_k S^w(n,k) Π_{j<k}(x - w(j)) = x^n`.
pub fn row_poly_check(w: &WeightSpec, n: usize) -> Result<bool> {
    let first = stirling1(w, n + 1)?;
    let second = stirling2(w, n + 1)?;
    let row_poly = Poly::new(first.row(n).to_vec());
    let dual = (0..=n).fold(Poly::zero(), |acc, k| &acc + &falling_product(w, k).scale(second.entry(n, k)));
    Ok(row_poly == falling_product(w, n) && dual == Poly::monomial(n))
}

/// Checks `Σ_{n} S^w(n,k) x^n · Π_{j<=k}(1 - w(j) x) ≡ x^k (mod x^N)`.
pub fn ogf_check(w: &WeightSpec, k: usize, truncation: usize) -> Result<bool> {
    if truncation == 0 {
        return Ok(true);
    }
    let column = if k < truncation {
        let m = stirling2(w, truncation)?;
        Poly::new(m.column(k))
    } else {
        Poly::zero()
    };
    let denominator = (0..=k).fold(Poly::constant(Rational::one()), |acc, j| {
        &acc * &Poly::new(vec![Rational::one(), -w.at(j)])
    });
    let product = (&column * &denominator).truncate(truncation);
    Ok(product == Poly::monomial(k).truncate(truncation))
}

/// Checks the shifted-weight relations at order `order` for a weight with `w(0) = 1`:
/// `S^ŵ(n,k) = S^w(n+1,k+1) - S^w(n,k+1)` ("3.28") and
/// `s^ŵ(n,k) = -Σ_{j<=k} s^w(n+1,j)` ("3.29").
pub fn shifted_weight_check(id: &str, w: &WeightSpec, order: usize) -> Result<IdentityReport> {
    if order == 0 {
        return Err(crate::error::MatrixError::EmptyOrder.into());
    }
    let hat = shift_weight(w);
    match id {
        "3.28" => {
            let (big, small) = (stirling2(w, order + 1)?, stirling2(&hat, order)?);
            IdentityReport::scan_triangle(id, order, 0..=order - 1, |n, k| {
                Ok((small.get(n, k), big.get(n + 1, k + 1) - big.get(n, k + 1)))
            })
        }
        "3.29" => {
            let (big, small) = (stirling1(w, order + 1)?, stirling1(&hat, order)?);
            IdentityReport::scan_triangle(id, order, 0..=order - 1, |n, k| {
                let sum = (0..=k).fold(Rational::zero(), |acc, j| acc + big.get(n + 1, j));
                Ok((small.get(n, k), -sum))
            })
        }
        other => Err(Error::unknown("shifted-weight identity", other, ["3.28", "3.29"])),
    }
}

/// Checks `S^ŵ · diag(F(l+1)) · s^ŵ = (Σ_{j<=k} F_1(n,j) - F_1(n+1,j))` where
/// `F_1 = S^w · diag(F) · s^w`, for a weight with `w(0) = 1`.
pub fn transfer_check<F>(w: &WeightSpec, f: F, order: usize) -> Result<IdentityReport>
where
    F: Fn(usize) -> Rational,
{
    if order == 0 {
        return Err(crate::error::MatrixError::EmptyOrder.into());
    }
    let hat = shift_weight(w);
    let conj = |w: &WeightSpec, n: usize, shift: usize| -> Result<TriMatrix> {
        let d = TriMatrix::diagonal((0..n).map(|l| f(l + shift)))?;
        Ok(stirling2(w, n)?.mul(&d)?.mul(&stirling1(w, n)?)?)
    };
    let lhs = conj(&hat, order, 1)?;
    let f1 = conj(w, order + 1, 0)?;
    IdentityReport::scan_triangle("3.31", order, 0..=order - 1, |n, k| {
        let rhs = (0..=k).fold(Rational::zero(), |acc, j| acc + f1.get(n, j) - f1.get(n + 1, j));
        Ok((lhs.get(n, k), rhs))
    })
}
