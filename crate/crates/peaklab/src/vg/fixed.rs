//! The sign-invariant quadratic monomials and the bijection from type A
//! standard monomials onto the invariant standard monomials.

use std::collections::BTreeSet;

use super::basis::standard_basis;
use super::poly::{Alphabet, Monomial, Var};
use super::{Presentation, RingSpec, VgError};

/// `{u_i w_ij} ∪ {w_ij w_ik} ∪ {v_ij w_jk}` over `i < j < k`.
pub fn quad_generators(n: usize) -> Vec<Monomial> {
    let n = n as u8;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Monomial::from_vars([Var::U(i), Var::W(i, j)]));
            for k in j + 1..=n {
                out.push(Monomial::from_vars([Var::W(i, j), Var::W(i, k)]));
                out.push(Monomial::from_vars([Var::V(i, j), Var::W(j, k)]));
            }
        }
    }
    out.sort();
    out
}

fn check_standard_t(m: &Monomial, n: usize) -> Result<(), VgError> {
    let not_standard = || VgError::NotStandard(m.to_string(), n);
    if !m.in_alphabet(Alphabet::T) || !m.is_squarefree() || m.max_index() > n {
        return Err(not_standard());
    }
    let mut levels = BTreeSet::new();
    for (v, _) in m.factors() {
        if !levels.insert(v.level()) {
            return Err(not_standard());
        }
    }
    Ok(())
}

/// Factors a standard type A monomial into invariant quadratics, peeling
/// off the largest remaining `t_ij` (lexicographic on `(i, j)`) each time.
pub fn pairing_phi(m: &Monomial, n: usize) -> Result<Monomial, VgError> {
    check_standard_t(m, n)?;
    let mut rest: BTreeSet<(u8, u8)> = m
        .factors()
        .iter()
        .filter_map(|(v, _)| match v {
            Var::T(i, j) => Some((*i, *j)),
            _ => None,
        })
        .collect();
    let mut out = Monomial::one();
    while let Some((i0, j0)) = rest.pop_last() {
        let top = Var::W(i0, j0);
        let same_row = rest.iter().rev().find(|(i, _)| *i == i0).copied();
        let into_row = rest.iter().filter(|(_, j)| *j == i0).max().copied();
        let partner = if let Some((_, k0)) = same_row {
            rest.remove(&(i0, k0));
            Var::W(i0, k0)
        } else if let Some((h0, _)) = into_row {
            rest.remove(&(h0, i0));
            Var::V(h0, i0)
        } else {
            Var::U(i0)
        };
        out = out.mul(&Monomial::from_vars([partner, top]));
    }
    Ok(out)
}

/// Some factorization of `q` into elements of `quad_generators(n)`.
pub fn factor_quadratics(q: &Monomial, n: usize) -> Option<Vec<Monomial>> {
    fn search(q: &Monomial, gens: &[Monomial]) -> Option<Vec<Monomial>> {
        if q.is_one() {
            return Some(Vec::new());
        }
        for g in gens.iter().filter(|g| g.divides(q)) {
            let rest = g.quotient_of(q).expect("divides");
            if let Some(mut found) = search(&rest, gens) {
                found.push(g.clone());
                return Some(found);
            }
        }
        None
    }
    search(q, &quad_generators(n))
}

/// Images of the type A standard basis under `pairing_phi`, sorted.
pub fn fixed_basis(n: usize) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = standard_basis(&RingSpec::new(Presentation::At, n))
        .iter()
        .map(|m| pairing_phi(m, n).expect("standard input"))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn names(v: &[Monomial]) -> Vec<String> {
        v.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn generators() {
        assert_eq!(names(&quad_generators(2)), ["u1*w12"]);
        let mut q3 = names(&quad_generators(3));
        q3.sort();
        assert_eq!(q3, ["u1*w12", "u1*w13", "u2*w23", "v12*w23", "w12*w13"]);
    }

    #[test]
    fn pairing_small() {
        assert_eq!(pairing_phi(&mono("t12*t23"), 3).unwrap(), mono("v12*w23"));
        assert_eq!(pairing_phi(&mono("t12*t13"), 3).unwrap(), mono("w12*w13"));
        assert_eq!(pairing_phi(&mono("t12"), 2).unwrap(), mono("u1*w12"));
        assert_eq!(pairing_phi(&Monomial::one(), 2).unwrap(), Monomial::one());
    }

    #[test]
    fn pairing_rejects_nonstandard() {
        assert!(pairing_phi(&mono("t13*t23"), 3).is_err());
        assert!(pairing_phi(&mono("t12^2"), 3).is_err());
        assert!(pairing_phi(&mono("t14"), 3).is_err());
        assert!(pairing_phi(&mono("u1"), 3).is_err());
    }

    #[test]
    fn quadratic_factorization() {
        let f = factor_quadratics(&mono("u1*w12*v12*w23"), 3).unwrap();
        assert_eq!(f.len(), 2);
        assert!(factor_quadratics(&mono("w13*w23"), 3).is_none());
        assert!(factor_quadratics(&mono("u1"), 3).is_none());
    }

    #[test]
    fn fixed_small() {
        assert_eq!(names(&fixed_basis(2)), ["1", "u1*w12"]);
        let mut f3 = names(&fixed_basis(3));
        f3.sort();
        assert_eq!(f3, ["1", "u1*w12", "u1*w13", "u2*w23", "v12*w23", "w12*w13"]);
    }
}
