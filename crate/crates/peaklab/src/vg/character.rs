//! Distinguished subspaces spanned by standard monomials and the traces of
//! group elements on them.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;

use super::action::act_monomial;
use super::basis::standard_basis;
use super::fixed::fixed_basis;
use super::graph::monomial_multigraph;
use super::poly::{Monomial, Polynomial, Var};
use super::reduce::Reducer;
use super::{Presentation, RingSpec, VgError};
use crate::combinatorics::{Partition, Permutation, SignedPermutation};
use crate::group_algebra::ClassFunction;
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    /// Standard monomials lying over the flat orbit `μ`.
    FlatOrbit(Partition),
    /// Fixed-basis monomials `q` with `(deg q, deg γ(q)) = (k, l)`.
    FixedBidegree(usize, usize),
    /// Fixed-basis monomials lying over the type B flat orbit `μ`.
    FixedFlatOrbit(Partition),
}

fn vw_degree(m: &Monomial) -> usize {
    m.factors()
        .iter()
        .filter(|(v, _)| matches!(v, Var::V(..) | Var::W(..)))
        .map(|(_, e)| *e as usize)
        .sum()
}

fn flat_orbit(m: &Monomial, spec: &RingSpec) -> Partition {
    let g = monomial_multigraph(m, spec.n);
    if spec.presentation.is_type_b() {
        g.flat_orbit_b()
    } else {
        g.flat_orbit_a()
    }
}

pub fn component_basis(spec: &RingSpec, selector: &Selector) -> Result<Vec<Monomial>, VgError> {
    let invalid = || VgError::InvalidSelector(format!("{selector:?}"), *spec);
    let vw_only = matches!(spec.presentation, Presentation::Bvw | Presentation::BvwGr);
    match selector {
        Selector::FlatOrbit(mu) => {
            let fits = if spec.presentation.is_type_b() {
                mu.weight() <= spec.n
            } else {
                mu.weight() == spec.n
            };
            if !fits {
                return Err(invalid());
            }
            Ok(standard_basis(spec)
                .into_iter()
                .filter(|m| &flat_orbit(m, spec) == mu)
                .collect())
        }
        Selector::FixedBidegree(k, l) => {
            if !vw_only {
                return Err(invalid());
            }
            Ok(fixed_basis(spec.n)
                .into_iter()
                .filter(|q| q.degree() as usize == *k && vw_degree(q) == *l)
                .collect())
        }
        Selector::FixedFlatOrbit(mu) => {
            if !vw_only || mu.weight() > spec.n {
                return Err(invalid());
            }
            Ok(fixed_basis(spec.n)
                .into_iter()
                .filter(|q| &flat_orbit(q, spec) == mu)
                .collect())
        }
    }
}

/// Reduced image of a basis monomial, checked to stay in the span.
fn image_in_span(
    g: &SignedPermutation,
    m: &Monomial,
    members: &HashSet<&Monomial>,
    reducer: &Reducer,
) -> Result<Polynomial, VgError> {
    let img = reducer.reduce_unchecked(act_monomial(g, m));
    if let Some(out) = img.terms().keys().find(|k| !members.contains(k)) {
        return Err(VgError::LeavesSpan(m.to_string(), format!("{g} (term {out})")));
    }
    Ok(img)
}

fn check_basis(basis: &[Monomial], spec: &RingSpec) -> Result<(), VgError> {
    for m in basis {
        spec.check(&Polynomial::monomial(m.clone()))?;
    }
    Ok(())
}

fn check_group(g: &SignedPermutation, spec: &RingSpec) -> Result<(), VgError> {
    if g.n() != spec.n {
        return Err(crate::combinatorics::CombinatoricsError::DegreeMismatch(spec.n, g.n()).into());
    }
    if spec.presentation == Presentation::At && !g.is_unsigned() {
        return Err(VgError::SignedActionOnTypeA(spec.presentation, g.to_string()));
    }
    Ok(())
}

/// Sign by which `τ_k` multiplies a monomial in `u, v, w`: it negates
/// `u_k`, `v_ik` and `w_kj`.
fn diagonal_sign(k: usize, m: &Monomial) -> i64 {
    let k = k as u8;
    let flips: u32 = m
        .factors()
        .iter()
        .filter(|(v, _)| match *v {
            Var::U(i) => i == k,
            Var::V(_, j) => j == k,
            Var::W(i, _) => i == k,
            _ => false,
        })
        .map(|(_, e)| *e)
        .sum();
    if flips.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Trace of `g` on the span of `basis` in the quotient ring.
pub fn trace(basis: &[Monomial], g: &SignedPermutation, spec: &RingSpec) -> Result<Q, VgError> {
    check_basis(basis, spec)?;
    check_group(g, spec)?;
    let reducer = Reducer::shared(*spec);
    let members: HashSet<&Monomial> = basis.iter().collect();
    let diag = basis
        .par_iter()
        .map(|m| Ok(image_in_span(g, m, &members, &reducer)?.coefficient(m)))
        .collect::<Result<Vec<Q>, VgError>>()?;
    Ok(diag.into_iter().fold(Q::zero(), |a, b| a + b))
}

fn assemble(n: usize, values: BTreeMap<Partition, Q>) -> Result<ClassFunction, VgError> {
    ClassFunction::from_map(n, values)
        .map_err(|missing| VgError::MissingClass(missing.to_string()))
}

/// `S_n`-character of the span of `basis`, from one representative per
/// conjugacy class.
pub fn subspace_character(
    basis: &[Monomial],
    representatives: &[Permutation],
    spec: &RingSpec,
) -> Result<ClassFunction, VgError> {
    let mut values = BTreeMap::new();
    for rep in representatives {
        values.insert(rep.cycle_type(), trace(basis, &SignedPermutation::from(rep), spec)?);
    }
    assemble(spec.n, values)
}

/// `S_n`-character of the sign-invariant part of a `B_n`-stable span:
/// the trace of `σ` on the invariants is the average of the traces of
/// `σγ` over the sign changes `γ`.
pub fn fixed_part_character(
    basis: &[Monomial],
    representatives: &[Permutation],
    spec: &RingSpec,
) -> Result<ClassFunction, VgError> {
    check_basis(basis, spec)?;
    if !spec.presentation.is_type_b() {
        return Err(VgError::InvalidSelector("sign-invariant part".into(), *spec));
    }
    let n = spec.n;
    let reducer = Reducer::shared(*spec);
    let members: HashSet<&Monomial> = basis.iter().collect();
    let signs: Vec<SignedPermutation> =
        (0..1usize << n).map(|mask| SignedPermutation::from_sign_mask(n, mask)).collect();
    let group_size = Q::from_integer((1u64 << n).into());

    let diagonal = matches!(spec.presentation, Presentation::Bvw | Presentation::BvwGr);
    // in the v, w variables every sign change multiplies a monomial by ±1,
    // so Σ_γ γ·m is 2^n m or 0 and only invariant monomials contribute
    let invariant: Vec<bool> = basis
        .iter()
        .map(|m| (1..=n).all(|k| diagonal_sign(k, m) == 1))
        .collect();

    let mut values = BTreeMap::new();
    for rep in representatives {
        let sigma = SignedPermutation::from(rep);
        check_group(&sigma, spec)?;
        let per_monomial = basis
            .par_iter()
            .zip(invariant.par_iter())
            .map(|(m, &inv)| {
                if diagonal {
                    if !inv {
                        return Ok(Q::zero());
                    }
                    let base = image_in_span(&sigma, m, &members, &reducer)?.coefficient(m);
                    return Ok(base * &group_size);
                }
                let mut sum = Q::zero();
                for gamma in &signs {
                    let g = sigma.compose_unchecked(gamma);
                    sum += image_in_span(&g, m, &members, &reducer)?.coefficient(m);
                }
                Ok(sum)
            })
            .collect::<Result<Vec<Q>, VgError>>()?;
        let total = per_monomial.into_iter().fold(Q::zero(), |a, b| a + b);
        values.insert(rep.cycle_type(), total / &group_size);
    }
    assemble(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partition, partitions_of};
    use crate::rational::int;

    fn reps(n: usize) -> Vec<Permutation> {
        partitions_of(n).iter().map(Permutation::with_cycle_type).collect()
    }

    #[test]
    fn selectors() {
        let a3 = RingSpec::new(Presentation::At, 3);
        let edges = component_basis(&a3, &Selector::FlatOrbit(partition(&[2, 1]))).unwrap();
        assert_eq!(edges.len(), 3);
        let gr3 = RingSpec::new(Presentation::BvwGr, 3);
        let c = component_basis(&gr3, &Selector::FixedBidegree(2, 1)).unwrap();
        let names: Vec<String> = c.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["u1*w12", "u1*w13", "u2*w23"]);
        let gr4 = RingSpec::new(Presentation::BvwGr, 4);
        assert_eq!(component_basis(&gr4, &Selector::FixedBidegree(4, 3)).unwrap().len(), 6);
        assert!(component_basis(&a3, &Selector::FixedBidegree(2, 1)).is_err());
        assert!(component_basis(&a3, &Selector::FlatOrbit(partition(&[2]))).is_err());
    }

    #[test]
    fn bidegree_component_character() {
        let gr3 = RingSpec::new(Presentation::BvwGr, 3);
        let basis = component_basis(&gr3, &Selector::FixedBidegree(2, 1)).unwrap();
        let chi = subspace_character(&basis, &reps(3), &gr3).unwrap();
        assert_eq!(chi.value(&partition(&[1, 1, 1])), int(3));
        assert_eq!(chi.value(&partition(&[2, 1])), int(-1));
        assert_eq!(chi.value(&partition(&[3])), int(0));
    }

    #[test]
    fn invariant_part_matches_direct_average() {
        // B_u has no diagonal shortcut; both presentations must agree with
        // the invariant count in degree 0
        for pres in [Presentation::Bu, Presentation::BvwGr] {
            let spec = RingSpec::new(pres, 2);
            let basis = standard_basis(&spec);
            let chi = fixed_part_character(&basis, &reps(2), &spec).unwrap();
            assert_eq!(chi.degree(), int(2), "{pres}");
        }
        let m: Monomial = "u1*w12".parse().unwrap();
        assert_eq!(diagonal_sign(1, &m), 1);
        assert_eq!(diagonal_sign(2, &m), 1);
        assert_eq!(diagonal_sign(2, &"v12".parse().unwrap()), -1);
    }

    #[test]
    fn span_violation_is_reported() {
        let gr3 = RingSpec::new(Presentation::BvwGr, 3);
        let basis: Vec<Monomial> = vec!["u1*w12".parse().unwrap()];
        assert!(matches!(
            subspace_character(&basis, &reps(3), &gr3),
            Err(VgError::LeavesSpan(..))
        ));
    }
}
