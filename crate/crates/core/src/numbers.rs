//! Bernoulli, Genocchi, tangent and median Genocchi numbers.
//!
//! Bernoulli numbers come from the classical recurrence and feed the
//! Genocchi and tangent numbers. Median Genocchi numbers are read off an
//! inverse binomial matrix instead, which keeps them independent of the
//! Bernoulli route so each can be used to check the other.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{binom, binom_q, from_big, frac, int, positive_integer, pow2, sign, Rational};

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// `B_n` with the convention `B_1 = -1/2`.
///
/// Solves `Σ_{k<m+1} C(m+1, k) B_k = 0` for `B_m`.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = bernoulli_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n {
        let m = cache.len();
        let s = cache
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| acc + binom_q(m as i64 + 1, k as i64) * b);
        cache.push(-s / int(m as i64 + 1));
    }
    cache[n].clone()
}

/// `b(n)`: Bernoulli numbers with `b(1) = +1/2`.
pub fn bernoulli_b(n: usize) -> Rational {
    if n == 1 {
        frac(1, 2)
    } else {
        bernoulli(n)
    }
}

/// Positive Genocchi number `G_{2n}` from `G_{2n} = (-1)^n 2 (1 - 2^{2n}) B_{2n}`.
pub fn genocchi(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidIndex { what: "genocchi", index: 0 });
    }
    let factor = from_big(BigInt::from(2) * (BigInt::one() - pow2(2 * n)));
    positive_integer("genocchi", n, sign(n) * factor * bernoulli(2 * n))
}

/// Signed Genocchi numbers `g_n`, the coefficients of `2z/(1+e^z)`.
pub fn genocchi_signed(n: usize) -> Result<Rational> {
    match n {
        0 => Err(Error::InvalidIndex { what: "genocchi_signed", index: 0 }),
        1 => Ok(Rational::one()),
        n if n % 2 == 1 => Ok(Rational::zero()),
        n => Ok(sign(n / 2) * from_big(genocchi(n / 2)?)),
    }
}

/// Tangent number `T_{2k+1} = 2^{2k+1} G_{2k+2} / (2k+2)`.
pub fn tangent(k: usize) -> Result<BigInt> {
    let g = from_big(genocchi(k + 1)?);
    let t = from_big(pow2(2 * k + 1)) * g / int(2 * k as i64 + 2);
    positive_integer("tangent", k, t)
}

fn median_cache() -> &'static Mutex<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// First column of the inverse of `[C(2i-j, j)]`, i.e. `(-1)^n H_{2n+1}`.
///
/// The matrix is unit lower triangular, so the column is a forward
/// substitution against `e_0` and stays integral.
pub fn odd_fibonacci_inverse_column(n: usize) -> BigInt {
    let mut col = median_cache().lock().unwrap_or_else(|e| e.into_inner());
    while col.len() <= n {
        let i = col.len() as i64;
        let s = col
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (j, x)| acc + binom(2 * i - j as i64, j as i64) * x);
        col.push(-s);
    }
    col[n].clone()
}

/// Median Genocchi number `H_{2n+1}`.
///
/// Fails if the values do not reproduce `G_{2n+2}` through
/// `G_{2n+2} = Σ_{j<=n} (-1)^{n-j} C(2n+1-j, j) H_{2j+1}`.
pub fn median_genocchi(n: usize) -> Result<BigInt> {
    let h = |j: usize| {
        let v = odd_fibonacci_inverse_column(j);
        if j % 2 == 0 {
            v
        } else {
            -v
        }
    };
    if median_genocchi_relation(n, h) != genocchi(n + 1)? {
        return Err(Error::CrossCheck { check: "4.18", n });
    }
    Ok(h(n))
}

/// `Σ_{j<=n} (-1)^{n-j} C(2n+1-j, j) H_{2j+1}` for a supplied `H`.
pub fn median_genocchi_relation(n: usize, h: impl Fn(usize) -> BigInt) -> BigInt {
    let ni = n as i64;
    (0..=n).fold(BigInt::zero(), |acc, j| {
        let term = binom(2 * ni + 1 - j as i64, j as i64) * h(j);
        if (n - j) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

pub const SEQUENCE_NAMES: &[&str] =
    &["bernoulli", "bernoulli-b", "genocchi", "genocchi-signed", "tangent", "median-genocchi", "scaled-bernoulli"];

/// The first `count` terms of a named sequence. `genocchi` and
/// `genocchi-signed` start at index 1, the others at 0; `scaled-bernoulli`
/// is `(2n+1) B_{2n}`.
pub fn sequence(name: &str, count: usize) -> Result<Vec<Rational>> {
    let term = |n: usize| -> Result<Rational> {
        Ok(match name {
            "bernoulli" => bernoulli(n),
            "bernoulli-b" => bernoulli_b(n),
            "genocchi" => from_big(genocchi(n + 1)?),
            "genocchi-signed" => genocchi_signed(n + 1)?,
            "tangent" => from_big(tangent(n)?),
            "median-genocchi" => from_big(median_genocchi(n)?),
            "scaled-bernoulli" => int(2 * n as i64 + 1) * bernoulli(2 * n),
            other => return Err(Error::unknown("sequence", other, SEQUENCE_NAMES)),
        })
    };
    if !SEQUENCE_NAMES.contains(&name) {
        return Err(Error::unknown("sequence", name, SEQUENCE_NAMES));
    }
    (0..count).map(term).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_sequences() {
        let g = sequence("genocchi", 8).unwrap();
        assert_eq!(g.iter().map(crate::rational::render).collect::<Vec<_>>().join(" "), "1 1 3 17 155 2073 38227 929569");
        assert_eq!(sequence("bernoulli", 1).unwrap(), vec![int(1)]);
        assert_eq!(sequence("median-genocchi", 6).unwrap().last(), Some(&int(608)));
        assert!(sequence("fibonacci", 3).is_err());
        assert!(sequence("fibonacci", 0).is_err());
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), frac(-1, 2));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(12), frac(-691, 2730));
        assert_eq!(bernoulli(16), frac(-3617, 510));
    }

    #[test]
    fn modified_bernoulli() {
        assert_eq!(bernoulli_b(1), frac(1, 2));
        assert_eq!(bernoulli_b(0), int(1));
        assert_eq!(bernoulli_b(4), frac(-1, 30));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for n in 1..40 {
            assert_eq!(bernoulli(2 * n + 1), int(0), "B_{}", 2 * n + 1);
        }
    }

    #[test]
    fn genocchi_values() {
        let got: Vec<BigInt> = (1..=8).map(|n| genocchi(n).unwrap()).collect();
        assert_eq!(got, ints(&[1, 1, 3, 17, 155, 2073, 38227, 929569]));
        assert!(matches!(genocchi(0), Err(Error::InvalidIndex { .. })));
    }

    #[test]
    fn signed_genocchi_values() {
        let got: Vec<Rational> = (1..=10).map(|n| genocchi_signed(n).unwrap()).collect();
        let want: Vec<Rational> = [1, -1, 0, 1, 0, -3, 0, 17, 0, -155].iter().map(|&v| int(v)).collect();
        assert_eq!(got, want);
    }

    /// `g_n = 2 (1 - 2^n) B_n`, an independent route through all indices.
    #[test]
    fn signed_genocchi_matches_bernoulli_form() {
        for n in 1..=30 {
            let alt = int(2) * (int(1) - from_big(pow2(n))) * bernoulli(n);
            assert_eq!(genocchi_signed(n).unwrap(), alt, "g_{n}");
        }
    }

    #[test]
    fn signed_and_tangent_consistency() {
        for k in 0..20usize {
            let g = genocchi_signed(2 * k + 2).unwrap();
            let lhs = sign(k + 1) * g / int(2 * k as i64 + 2);
            let mid = from_big(genocchi(k + 1).unwrap()) / int(2 * k as i64 + 2);
            let rhs = from_big(tangent(k).unwrap()) / from_big(pow2(2 * k + 1));
            assert_eq!(lhs, mid);
            assert_eq!(mid, rhs);
        }
    }

    #[test]
    fn tangent_values() {
        let got: Vec<BigInt> = (0..7).map(|k| tangent(k).unwrap()).collect();
        assert_eq!(got, ints(&[1, 2, 16, 272, 7936, 353792, 22368256]));
    }

    #[test]
    fn median_values() {
        let got: Vec<BigInt> = (0..6).map(|n| median_genocchi(n).unwrap()).collect();
        assert_eq!(got, ints(&[1, 1, 2, 8, 56, 608]));
        assert_eq!(median_genocchi(6).unwrap(), BigInt::from(9440));
    }

    #[test]
    fn median_relation_reproduces_genocchi() {
        let h = |j: usize| median_genocchi(j).unwrap();
        for n in 0..25 {
            assert_eq!(median_genocchi_relation(n, h), genocchi(n + 1).unwrap());
        }
        // The relation does not hold with G_{2n} on the left.
        assert_ne!(median_genocchi_relation(2, h), genocchi(2).unwrap());
    }

    #[test]
    fn cache_is_order_independent() {
        let late = bernoulli(30);
        let fresh = {
            // Recompute from scratch without the cache.
            let mut b = vec![int(1)];
            for m in 1..=30usize {
                let s = (0..m).fold(int(0), |acc, k| acc + binom_q(m as i64 + 1, k as i64) * &b[k]);
                b.push(-s / int(m as i64 + 1));
            }
            b[30].clone()
        };
        assert_eq!(late, fresh);
    }

    #[test]
    fn concurrent_access_agrees() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || (0..40).rev().map(|n| bernoulli(n + t)).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, r) in results.iter().enumerate() {
            for (i, v) in r.iter().enumerate() {
                assert_eq!(*v, bernoulli(39 - i + t));
            }
        }
    }
}
