//! Standard monomial bases and Hilbert series.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::{Monomial, Var};
use super::{Presentation, RingSpec};

/// The level sets: a standard monomial uses at most one variable from each.
pub fn levels(spec: &RingSpec) -> Vec<Vec<Var>> {
    let n = spec.n as u8;
    match spec.presentation {
        Presentation::At => (2..=n)
            .map(|j| (1..j).map(|i| Var::T(i, j)).collect())
            .collect(),
        Presentation::Bu => (1..=n)
            .map(|k| {
                std::iter::once(Var::U(k))
                    .chain((1..k).flat_map(|i| [Var::UPlus(i, k), Var::UMinus(i, k)]))
                    .collect()
            })
            .collect(),
        Presentation::Bvw | Presentation::BvwGr => (1..=n)
            .map(|k| {
                std::iter::once(Var::U(k))
                    .chain((1..k).flat_map(|i| [Var::V(i, k), Var::W(i, k)]))
                    .collect()
            })
            .collect(),
    }
}

/// Runs `f` on every mixed-radix digit vector with digit `d` in
/// `0..=sizes[d]`; digit 0 means "no variable from this level".
fn for_each_choice(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    let mut digits = vec![0usize; sizes.len()];
    loop {
        f(&digits);
        let mut pos = 0;
        loop {
            if pos == digits.len() {
                return;
            }
            if digits[pos] < sizes[pos] {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// All standard monomials, sorted in the monomial order.
pub fn standard_basis(spec: &RingSpec) -> Vec<Monomial> {
    let levels = levels(spec);
    let sizes: Vec<usize> = levels.iter().map(Vec::len).collect();
    let mut out = Vec::new();
    for_each_choice(&sizes, |digits| {
        out.push(Monomial::from_vars(
            digits
                .iter()
                .zip(&levels)
                .filter(|(d, _)| **d > 0)
                .map(|(d, level)| level[d - 1]),
        ));
    });
    out.sort();
    out
}

/// Dimensions of the standard basis by degree, counted without building
/// the monomials.
pub fn hilbert_series(spec: &RingSpec) -> Vec<u64> {
    let sizes: Vec<usize> = levels(spec).iter().map(Vec::len).collect();
    let mut h = vec![0u64; sizes.len() + 1];
    for_each_choice(&sizes, |digits| {
        h[digits.iter().filter(|&&d| d > 0).count()] += 1;
    });
    h
}

/// Dimensions by (total degree, degree in the `v, w` variables).
pub fn hilbert_series_bigraded(spec: &RingSpec) -> BigradedSeries {
    let levels = levels(spec);
    let sizes: Vec<usize> = levels.iter().map(Vec::len).collect();
    let mut series = BigradedSeries::default();
    for_each_choice(&sizes, |digits| {
        let mut k = 0;
        let mut l = 0;
        for (d, level) in digits.iter().zip(&levels) {
            if *d > 0 {
                k += 1;
                if matches!(level[d - 1], Var::V(..) | Var::W(..)) {
                    l += 1;
                }
            }
        }
        series.add(k, l, 1);
    });
    series
}

/// A polynomial in `t, q` with nonnegative integer coefficients; the key
/// `(k, l)` stands for `t^k q^l`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedSeries {
    coeffs: BTreeMap<(usize, usize), u64>,
}

impl BigradedSeries {
    pub fn from_map(coeffs: BTreeMap<(usize, usize), u64>) -> Self {
        BigradedSeries {
            coeffs: coeffs.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }

    pub fn add(&mut self, k: usize, l: usize, c: u64) {
        if c > 0 {
            *self.coeffs.entry((k, l)).or_insert(0) += c;
        }
    }

    pub fn coefficient(&self, k: usize, l: usize) -> u64 {
        self.coeffs.get(&(k, l)).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.coeffs
    }

    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// Product of two series.
    pub fn mul(&self, other: &BigradedSeries) -> BigradedSeries {
        let mut out = BigradedSeries::default();
        for (&(a, b), &x) in &self.coeffs {
            for (&(c, d), &y) in &other.coeffs {
                out.add(a + c, b + d, x * y);
            }
        }
        out
    }
}

impl fmt::Display for BigradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(k, l), &c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut body = String::new();
            for (name, e) in [("t", k), ("q", l)] {
                match e {
                    0 => {}
                    1 => body.push_str(name),
                    _ => body.push_str(&format!("{name}^{e}")),
                }
            }
            match (c, body.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{body}")?,
                _ => write!(f, "{c}{body}")?,
            }
        }
        Ok(())
    }
}
