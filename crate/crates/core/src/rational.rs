//! The exact scalar type plus the small combinatorial helpers every other
//! module leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// `(-1)^e` as a rational.
pub fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Binomial coefficient with `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binom_q(n: i64, k: i64) -> Rational {
    from_big(binom(n, k))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(2k-1)!! = 1·3·…·(2k-1)`, with the empty product for `k = 0`.
pub fn odd_double_factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * (2 * i - 1))
}

pub fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Renders `p/q`, or bare `p` when the denominator is one.
pub fn render(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Inverse of [`render`]. Accepts `p`, `-p`, `p/q`; rejects a zero denominator.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Returns the integer value of `x`, or `None` if it has a denominator.
pub fn to_integer(x: &Rational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

pub(crate) fn positive_integer(what: &'static str, index: usize, x: Rational) -> Result<BigInt> {
    let v = to_integer(&x).ok_or_else(|| Error::NonIntegral {
        what,
        index,
        value: render(&x),
    })?;
    if !v.is_positive() {
        return Err(Error::NonPositive { what, index, value: v.to_string() });
    }
    Ok(v)
}

/// Whether `x` is stored in lowest terms with a positive denominator.
pub fn is_reduced(x: &Rational) -> bool {
    x.numer().gcd(x.denom()).is_one() && x.denom().is_positive()
}
