//! Irreducible characters of `S_n` by the Murnaghan-Nakayama rule, and
//! the Schur expansion they give.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{SymFunc, SymFuncError};
use crate::combinatorics::{partitions_of, Partition};
use crate::rational::Q;

/// Memoized `χ^μ(λ)`. Border strips are removed as bead moves on the
/// beta-set of `μ`, one part of `λ` at a time, largest first.
#[derive(Default)]
pub struct CharacterTable {
    memo: HashMap<(Partition, Partition), i64>,
}

fn beta_set(mu: &Partition) -> Vec<usize> {
    let l = mu.len();
    mu.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("positive parts")
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, mu: &Partition, lambda: &Partition) -> i64 {
        if mu.weight() != lambda.weight() {
            return 0;
        }
        if lambda.is_empty() {
            return 1;
        }
        let key = (mu.clone(), lambda.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = lambda.parts()[0];
        let rest = lambda.without_part(r).expect("r is a part");
        let beta = beta_set(mu);
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let crossed = beta.iter().filter(|&&c| b - r < c && c < b).count();
            let mut moved = beta.clone();
            moved[i] = b - r;
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            total += sign * self.value(&from_beta(moved), &rest);
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn character_value(mu: &Partition, lambda: &Partition) -> i64 {
    CharacterTable::new().value(mu, lambda)
}

/// `s_μ = Σ_λ χ^μ(λ) p_λ / z_λ`.
pub fn schur(mu: &Partition) -> SymFunc {
    let mut table = CharacterTable::new();
    SymFunc::from_terms(partitions_of(mu.weight()).into_iter().map(|l| {
        let chi = Q::from_integer(BigInt::from(table.value(mu, &l)));
        let z = Q::from_integer(BigInt::from(l.z()));
        (l, chi / z)
    }))
}

/// Coefficients `⟨f, s_μ⟩ = Σ_λ c_λ χ^μ(λ)`, nonzero ones only.
pub fn to_schur(f: &SymFunc) -> Result<BTreeMap<Partition, Q>, SymFuncError> {
    if f.is_zero() {
        return Ok(BTreeMap::new());
    }
    let n = f.degree().ok_or(SymFuncError::NotHomogeneous)?;
    let mut table = CharacterTable::new();
    let mut out = BTreeMap::new();
    for mu in partitions_of(n) {
        let mut c = Q::zero();
        for (l, x) in f.terms() {
            c += x * Q::from_integer(BigInt::from(table.value(&mu, l)));
        }
        if !c.is_zero() {
            out.insert(mu, c);
        }
    }
    Ok(out)
}
