//! Eulerian idempotents of types A and B, and the peak idempotents obtained
//! by forgetting signs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_traits::Zero;
use thiserror::Error;

use crate::combinatorics::{Partition, Permutation, SignedPermutation};
use crate::group_algebra::{
    phi_push, AlgebraError, BnElement, GroupAlgebraElement, GroupElement, SnElement,
};
use crate::rational::{binomial_in_t, frac, int, Q};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IdempotentError {
    #[error("degree {n} outside the configured range 1..={max}")]
    OutOfRange { n: usize, max: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Upper limits on `n` for building families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_a: usize,
    pub max_b: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_a: 8, max_b: 6 }
    }
}

fn check_range(n: usize, max: usize) -> Result<(), IdempotentError> {
    if n == 0 || n > max {
        return Err(IdempotentError::OutOfRange { n, max });
    }
    Ok(())
}

/// A family `E_0, E_1, …` of group algebra elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianFamily<G: GroupElement> {
    pub n: usize,
    pub elements: Vec<GroupAlgebraElement<G>>,
}

/// Builds the family from per-element coefficient polynomials in `t`;
/// element `k` collects the coefficient of `t^(k + shift)`.
fn family_from_polys<G: GroupElement>(
    n: usize,
    size: usize,
    shift: usize,
    coeffs_by_des: &[Vec<Q>],
    des: impl Fn(&G) -> usize,
) -> Vec<GroupAlgebraElement<G>> {
    let mut terms: Vec<Vec<(G, Q)>> = vec![Vec::new(); size];
    for r in 0..G::order(n) {
        let g = G::unrank(n, r);
        let poly = &coeffs_by_des[des(&g)];
        for (k, bucket) in terms.iter_mut().enumerate() {
            if let Some(c) = poly.get(k + shift) {
                if !c.is_zero() {
                    bucket.push((g.clone(), c.clone()));
                }
            }
        }
    }
    terms
        .into_iter()
        .map(|t| GroupAlgebraElement::from_terms(n, t).expect("degrees agree"))
        .collect()
}

pub fn eulerian_a(n: usize) -> Result<EulerianFamily<Permutation>, IdempotentError> {
    eulerian_a_with(n, &Limits::default())
}

/// `Σ_k t^(k+1) E_k = Σ_σ binom(t - 1 + n - des σ, n) σ`.
pub fn eulerian_a_with(
    n: usize,
    limits: &Limits,
) -> Result<EulerianFamily<Permutation>, IdempotentError> {
    check_range(n, limits.max_a)?;
    let polys: Vec<Vec<Q>> = (0..n)
        .map(|d| binomial_in_t(&int(1), &int(n as i64 - 1 - d as i64), n))
        .collect();
    Ok(EulerianFamily {
        n,
        elements: family_from_polys(n, n, 1, &polys, |g: &Permutation| g.des()),
    })
}

pub fn eulerian_b(n: usize) -> Result<EulerianFamily<SignedPermutation>, IdempotentError> {
    eulerian_b_with(n, &Limits::default())
}

/// `Σ_k t^k E_k = Σ_w binom((t - 1)/2 + n - des w, n) w`.
pub fn eulerian_b_with(
    n: usize,
    limits: &Limits,
) -> Result<EulerianFamily<SignedPermutation>, IdempotentError> {
    check_range(n, limits.max_b)?;
    let polys: Vec<Vec<Q>> = (0..=n)
        .map(|d| binomial_in_t(&frac(1, 2), &(frac(-1, 2) + int(n as i64 - d as i64)), n))
        .collect();
    Ok(EulerianFamily {
        n,
        elements: family_from_polys(n, n + 1, 0, &polys, |g: &SignedPermutation| g.des()),
    })
}

/// The images `π_k = φ(E^B_k)` in `kS_n`, `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakFamily {
    pub n: usize,
    pub elements: Vec<SnElement>,
}

impl PeakFamily {
    /// Indices `k` with `π_k = 0`.
    pub fn zero_indices(&self) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&k| self.elements[k].is_zero())
            .collect()
    }
}

pub fn peak_idempotents(n: usize) -> Result<PeakFamily, IdempotentError> {
    peak_idempotents_with(n, &Limits::default())
}

pub fn peak_idempotents_with(n: usize, limits: &Limits) -> Result<PeakFamily, IdempotentError> {
    let b = eulerian_b_with(n, limits)?;
    Ok(PeakFamily {
        n,
        elements: b.elements.iter().map(phi_push).collect(),
    })
}

/// Checks that the coefficient of `g` depends only on `stat(g)`, including
/// elements outside the support. Returns two elements with equal statistic
/// and different coefficients on failure.
pub fn constant_on_statistic<G: GroupElement, K: Ord + Debug>(
    e: &GroupAlgebraElement<G>,
    stat: impl Fn(&G) -> K,
) -> Result<(), (G, G)> {
    let mut seen: BTreeMap<K, (G, Q)> = BTreeMap::new();
    for r in 0..G::order(e.n()) {
        let g = G::unrank(e.n(), r);
        let c = e.coefficient(&g);
        match seen.get(&stat(&g)) {
            Some((h, d)) if d != &c => return Err((h.clone(), g)),
            Some(_) => {}
            None => {
                seen.insert(stat(&g), (g, c));
            }
        }
    }
    Ok(())
}

pub fn descent_set_a(g: &Permutation) -> BTreeSet<usize> {
    g.descent_set()
}

pub fn descent_set_b(g: &SignedPermutation) -> BTreeSet<usize> {
    g.descent_set()
}

pub fn peak_set(g: &Permutation) -> BTreeSet<usize> {
    g.peak_set()
}

/// Entry point for an externally supplied primitive family: compares
/// `φ(E^B_μ)` with `Σ_{oddparts(λ) = μ} E^A_λ` for every `μ` supplied on the
/// type-B side. The crate ships no construction of either family.
pub fn compare_primitive_families(
    type_b: &BTreeMap<Partition, BnElement>,
    type_a: &BTreeMap<Partition, SnElement>,
    n: usize,
) -> Result<BTreeMap<Partition, bool>, IdempotentError> {
    let mut out = BTreeMap::new();
    for (mu, eb) in type_b {
        let mut rhs = SnElement::zero(n);
        for (lambda, ea) in type_a {
            if &lambda.odd_parts() == mu {
                rhs = rhs.add(ea)?;
            }
        }
        out.insert(mu.clone(), phi_push(eb) == rhs);
    }
    Ok(out)
}
