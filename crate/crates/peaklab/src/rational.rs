//! Exact rational helpers shared by the algebra modules.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let den: BigInt = b.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Q::new(a.trim().parse().ok()?, den))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Polynomial in one variable, dense, lowest degree first.
pub(crate) fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients in `t` of `binom(slope*t + offset, n) = x(x-1)...(x-n+1)/n!`.
pub(crate) fn binomial_in_t(slope: &Q, offset: &Q, n: usize) -> Vec<Q> {
    let mut acc = vec![Q::one()];
    for i in 0..n {
        let factor = [offset - int(i as i64), slope.clone()];
        acc = poly_mul(&acc, &factor);
    }
    let nf = Q::from_integer(BigInt::from(crate::combinatorics::factorial(n)));
    acc.into_iter().map(|c| c / &nf).collect()
}
