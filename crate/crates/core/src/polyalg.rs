//! Dense univariate polynomials over the rationals, and the Fibonacci and
//! Lucas polynomial families `F_n(s)`, `L_n(s)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{MatrixError, Result};
use crate::rational::{binom_q, int, render, Rational};
use crate::trimat::TriMatrix;

/// Coefficient `k` multiplies `s^k`. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `s^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Drops every term of degree `>= n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, s: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * s + c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => render(c),
                1 => format!("{}*s", render(c)),
                _ => format!("{}*s^{}", render(c), k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// `F_n(s) = Σ_k C(n-1-k, k) s^k`.
pub fn fib_poly(n: usize) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let m = n as i64 - 1;
    let p = Poly::new((0..=(n - 1) / 2).map(|k| binom_q(m - k as i64, k as i64)).collect());
    debug_assert_eq!(p, fib_poly_by_recursion(n));
    p
}

/// `F_n` from `F_n = F_{n-1} + s F_{n-2}`, `F_0 = 0`, `F_1 = 1`.
pub fn fib_poly_by_recursion(n: usize) -> Poly {
    by_recursion(Poly::zero(), Poly::constant(Rational::one()), n)
}

/// `L_n(s) = Σ_k n/(n-k) C(n-k, k) s^k` for `n >= 1`, `L_0 = 2`.
pub fn lucas_poly(n: usize) -> Poly {
    if n == 0 {
        return Poly::constant(int(2));
    }
    let ni = n as i64;
    let p = Poly::new(
        (0..=n / 2)
            .map(|k| {
                let k = k as i64;
                int(ni) / int(ni - k) * binom_q(ni - k, k)
            })
            .collect(),
    );
    debug_assert_eq!(p, lucas_poly_by_recursion(n));
    p
}

/// `L_n` from the Fibonacci recursion with `L_0 = 2`, `L_1 = 1`.
pub fn lucas_poly_by_recursion(n: usize) -> Poly {
    by_recursion(Poly::constant(int(2)), Poly::constant(Rational::one()), n)
}

fn by_recursion(p0: Poly, p1: Poly, n: usize) -> Poly {
    let s = Poly::monomial(1);
    let (mut a, mut b) = (p0, p1);
    for _ in 0..n {
        let next = &b + &(&s * &a);
        a = b;
        b = next;
    }
    a
}

pub fn eval(p: &Poly, s: &Rational) -> Rational {
    p.eval(s)
}

/// The four polynomial bases whose coefficient rows form triangular matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyBasis {
    /// `F_1, F_3, F_5, …`
    FibOdd,
    /// `F_2, F_4, F_6, …`
    FibEven,
    /// `L_0, L_2, L_4, …`
    LucasEven,
    /// `L_1, L_3, L_5, …`
    LucasOdd,
}

impl PolyBasis {
    pub const ALL: [PolyBasis; 4] = [PolyBasis::FibOdd, PolyBasis::FibEven, PolyBasis::LucasEven, PolyBasis::LucasOdd];

    /// The `i`-th polynomial of the basis; it has degree `i`.
    pub fn element(self, i: usize) -> Poly {
        match self {
            PolyBasis::FibOdd => fib_poly(2 * i + 1),
            PolyBasis::FibEven => fib_poly(2 * i + 2),
            PolyBasis::LucasEven => lucas_poly(2 * i),
            PolyBasis::LucasOdd => lucas_poly(2 * i + 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PolyBasis::FibOdd => "fib-odd",
            PolyBasis::FibEven => "fib-even",
            PolyBasis::LucasEven => "lucas-even",
            PolyBasis::LucasOdd => "lucas-odd",
        }
    }
}

/// Coefficient matrix of a basis: row `i` holds the coefficients of its `i`-th element.
pub fn basis_matrix(which: PolyBasis, order: usize) -> Result<TriMatrix> {
    if order == 0 {
        return Err(MatrixError::EmptyOrder.into());
    }
    let rule = |i: usize, j: usize| -> Rational {
        let (i, j) = (i as i64, j as i64);
        match which {
            PolyBasis::FibOdd => binom_q(2 * i - j, j),
            PolyBasis::FibEven => binom_q(2 * i + 1 - j, j),
            PolyBasis::LucasEven if i == 0 => int(2),
            PolyBasis::LucasEven => int(2 * i) / int(2 * i - j) * binom_q(2 * i - j, j),
            PolyBasis::LucasOdd => int(2 * i + 1) / int(2 * i + 1 - j) * binom_q(2 * i + 1 - j, j),
        }
    };
    Ok(TriMatrix::from_fn(order, rule)?)
}

/// Expands `Σ_k weights[k] · basis[k]` as a polynomial.
pub fn combine(weights: &[Rational], basis: impl Fn(usize) -> Poly) -> Poly {
    weights
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .fold(Poly::zero(), |acc, (k, w)| &acc + &basis(k).scale(w))
}
