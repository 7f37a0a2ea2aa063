//! The bigraded Hilbert series of the sign-invariant subring, written
//! `Σ t^{(n-odd)/2} q^{n-cyc}`, by closed form, recursion, equivariant
//! dimensions and generating function.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::series::equivariant_series;
use crate::combinatorics::{factorial, partitions_of};
use crate::rational::{frac, int, Q};
use crate::vg::BigradedSeries;

/// Sum over cycle types weighted by class size.
pub fn bihilb(n: usize) -> BigradedSeries {
    let mut out = BigradedSeries::default();
    for l in partitions_of(n) {
        let size = l.class_size().to_u64().expect("small n");
        out.add((n - l.odd_count()) / 2, n - l.len(), size);
    }
    out
}

/// `H_n = H_{n-1} + tq(n-1)(1 + q(n-2)) H_{n-2}` from `H_0 = H_1 = 1`.
pub fn bihilb_recursive(n: usize) -> BigradedSeries {
    let one = BigradedSeries::from_map(BTreeMap::from([((0, 0), 1)]));
    let mut prev = one.clone();
    let mut cur = one;
    for m in 2..=n {
        let m = m as u64;
        let factor = BigradedSeries::from_map(BTreeMap::from([((1, 1), m - 1), ((1, 2), (m - 1) * (m - 2))]));
        let mut next = cur.clone();
        for (&(a, b), &c) in factor.mul(&prev).coeffs() {
            next.add(a, b, c);
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Dimensions of the coefficients of the equivariant series.
pub fn bihilb_from_equivariant(n: usize) -> BigradedSeries {
    equivariant_series(n)
        .dimensions(n)
        .expect("Lie characters have integral dimensions")
}

/// Checks both `q = 1` recurrences: `H_n(t,1) = H_{n-1} + t(n-1)^2 H_{n-2}`,
/// and `P_n = x P_{n-1} + (n-1)^2 P_{n-2}` for the rescaling
/// `P_n(x) = x^n H_n(x^{-2}, 1) = Σ_σ x^{odd(σ)}`. Returns the first failing
/// `n` up to `max_n`.
pub fn sheffer_check(max_n: usize) -> Result<(), usize> {
    let at_q1 = |n: usize| -> Vec<u64> {
        let mut v = vec![0u64; n / 2 + 1];
        for (&(a, _), &c) in bihilb(n).coeffs() {
            v[a] += c;
        }
        v
    };
    let rescaled = |n: usize| -> Vec<u64> {
        let mut v = vec![0u64; n + 1];
        for (a, c) in at_q1(n).into_iter().enumerate() {
            v[n - 2 * a] += c;
        }
        v
    };
    for n in 2..=max_n {
        let sq = ((n - 1) * (n - 1)) as u64;
        let (h, h1, h2) = (at_q1(n), at_q1(n - 1), at_q1(n - 2));
        let mut expect = vec![0u64; n / 2 + 1];
        for (a, c) in h1.iter().enumerate() {
            expect[a] += c;
        }
        for (a, c) in h2.iter().enumerate() {
            expect[a + 1] += sq * c;
        }
        let (p, p1, p2) = (rescaled(n), rescaled(n - 1), rescaled(n - 2));
        let mut expect_p = vec![0u64; n + 1];
        for (a, c) in p1.iter().enumerate() {
            expect_p[a + 1] += c;
        }
        for (a, c) in p2.iter().enumerate() {
            expect_p[a] += sq * c;
        }
        if h != expect || p != expect_p {
            return Err(n);
        }
    }
    Ok(())
}

/// Polynomial in `a, b`.
type AbPoly = BTreeMap<(u32, u32), Q>;

fn ab_mul(x: &AbPoly, y: &AbPoly) -> AbPoly {
    let mut out = AbPoly::new();
    for (&(i, j), c) in x {
        for (&(k, l), d) in y {
            *out.entry((i + k, j + l)).or_insert_with(Q::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `binom(ca·a + cb·b, r)` as a polynomial in `a, b`.
fn ab_binomial(ca: &Q, cb: &Q, r: usize) -> AbPoly {
    let mut acc = AbPoly::from([((0, 0), Q::one())]);
    for i in 0..r {
        let mut factor = AbPoly::new();
        factor.insert((1, 0), ca.clone());
        factor.insert((0, 1), cb.clone());
        if i > 0 {
            factor.insert((0, 0), int(-(i as i64)));
        }
        factor.retain(|_, c| !c.is_zero());
        acc = ab_mul(&acc, &factor);
    }
    let rf = Q::from_integer(BigInt::from(factorial(r)));
    acc.into_iter().map(|(k, c)| (k, c / &rf)).collect()
}

/// Where the formal variables go: `a = s^{a_power} q^{-1}`,
/// `b = s^{b_power} q^{-1}`, `z = s q x`, with `s = t^{1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub a_power: i64,
    pub b_power: i64,
}

impl Substitution {
    /// `a = q^{-1}`, `b = t^{-1/2} q^{-1}`.
    pub const AS_STATED: Substitution = Substitution { a_power: 0, b_power: -1 };
    /// `a = t^{-1/2} q^{-1}`, `b = q^{-1}`: the one that makes the odd
    /// cycles carry the `t`-weight.
    pub const ODD_WEIGHTED: Substitution = Substitution { a_power: -1, b_power: 0 };
}

/// `n!` times the coefficient of `x^n` in
/// `(1-z)^{-(a+b)/2} (1+z)^{(a-b)/2}` after substitution, as a map from
/// `(exponent of s, exponent of q)` to coefficients.
pub fn generating_function_coefficient(n: usize, sub: Substitution) -> BTreeMap<(i64, i64), Q> {
    let half = frac(1, 2);
    let alpha = (-half.clone(), -half.clone());
    let beta = (half.clone(), -half);
    let mut in_ab = AbPoly::new();
    for i in 0..=n {
        let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
        let left = ab_binomial(&alpha.0, &alpha.1, i);
        let right = ab_binomial(&beta.0, &beta.1, n - i);
        for (k, c) in ab_mul(&left, &right) {
            *in_ab.entry(k).or_insert_with(Q::zero) += c * &sign;
        }
    }
    let nf = Q::from_integer(BigInt::from(factorial(n)));
    let mut out: BTreeMap<(i64, i64), Q> = BTreeMap::new();
    for ((i, j), c) in in_ab {
        if c.is_zero() {
            continue;
        }
        let (i, j) = (i as i64, j as i64);
        let key = (n as i64 + sub.a_power * i + sub.b_power * j, n as i64 - i - j);
        *out.entry(key).or_insert_with(Q::zero) += c * &nf;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingMismatch {
    pub n: usize,
    pub expected: BTreeMap<(i64, i64), Q>,
    pub got: BTreeMap<(i64, i64), Q>,
}

/// Compares the generating-function coefficients with `bihilb(n)` written in
/// `s = t^{1/2}`, for `n = 0..=max_n`.
pub fn generating_function_check(max_n: usize, sub: Substitution) -> Result<(), GeneratingMismatch> {
    for n in 0..=max_n {
        let expected: BTreeMap<(i64, i64), Q> = bihilb(n)
            .coeffs()
            .iter()
            .map(|(&(a, b), &c)| ((2 * a as i64, b as i64), int(c as i64)))
            .collect();
        let got = generating_function_coefficient(n, sub);
        if got != expected {
            return Err(GeneratingMismatch { n, expected, got });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bihilb(2).to_string(), "1 + tq");
        assert_eq!(bihilb(4).to_string(), "1 + 6tq + 8tq^2 + 3t^2q^2 + 6t^2q^3");
        for n in 0..=7 {
            assert_eq!(bihilb_recursive(n), bihilb(n), "n = {n}");
            assert_eq!(bihilb_from_equivariant(n), bihilb(n), "n = {n}");
        }
    }

    #[test]
    fn generating_function() {
        assert_eq!(generating_function_check(6, Substitution::ODD_WEIGHTED), Ok(()));
        let err = generating_function_check(6, Substitution::AS_STATED).unwrap_err();
        assert_eq!(err.n, 1);
        assert_eq!(err.got, BTreeMap::from([((1, 0), int(1))]));
    }

    #[test]
    fn sheffer() {
        assert_eq!(sheffer_check(8), Ok(()));
    }
}
