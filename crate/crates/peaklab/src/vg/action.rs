//! Signed-permutation action through linear forms, the change of basis
//! between `u±` and `v, w`, and the substitution `γ`.

use std::collections::HashMap;

use super::poly::{Alphabet, Monomial, Polynomial, Var};
use super::{Presentation, RingSpec, VgError};
use crate::combinatorics::SignedPermutation;
use crate::rational::{frac, int};

/// A linear form `Σ c_p x_p` with coefficients ±1 on at most two indices.
type Form = Vec<(usize, i64)>;

fn form_of(v: Var) -> Form {
    match v {
        Var::U(i) => vec![(i as usize, 1)],
        Var::T(i, j) | Var::UPlus(i, j) => vec![(i as usize, -1), (j as usize, 1)],
        Var::UMinus(i, j) => vec![(i as usize, 1), (j as usize, 1)],
        Var::V(..) | Var::W(..) => unreachable!("v and w go through the change of basis"),
    }
}

/// `x_p ↦ sign(g(p)) x_|g(p)|`.
fn act_form(g: &SignedPermutation, form: &Form) -> Form {
    let mut out: Form = form
        .iter()
        .map(|&(p, c)| {
            let img = g.apply(p as i64);
            (img.unsigned_abs() as usize, c * img.signum())
        })
        .collect();
    out.sort_unstable();
    out
}

/// Writes a form as `±` one of the chosen representatives.
fn var_of_form(form: &Form, type_a: bool) -> (i64, Var) {
    match *form.as_slice() {
        [(i, c)] => (c, Var::U(i as u8)),
        [(i, ci), (j, cj)] => {
            let (i, j) = (i as u8, j as u8);
            let plus = if type_a { Var::T(i, j) } else { Var::UPlus(i, j) };
            match (ci, cj) {
                (-1, 1) => (1, plus),
                (1, -1) => (-1, plus),
                (1, 1) => (1, Var::UMinus(i, j)),
                _ => (-1, Var::UMinus(i, j)),
            }
        }
        _ => unreachable!("forms have one or two terms"),
    }
}

fn act_on_var(g: &SignedPermutation, v: Var) -> Polynomial {
    match v {
        Var::V(..) | Var::W(..) => {
            let expanded = change_var(v, BasisChange::VwToPlusMinus);
            let moved = expanded
                .substitute(|x| Ok(act_on_var(g, x)))
                .expect("linear images");
            moved
                .substitute(|x| Ok(change_var(x, BasisChange::PlusMinusToVw)))
                .expect("linear images")
        }
        _ => {
            let (c, w) = var_of_form(&act_form(g, &form_of(v)), matches!(v, Var::T(..)));
            Polynomial::term(Monomial::var(w), int(c))
        }
    }
}

fn check_action(g: &SignedPermutation, spec: &RingSpec) -> Result<(), VgError> {
    if g.n() != spec.n {
        return Err(crate::combinatorics::CombinatoricsError::DegreeMismatch(spec.n, g.n()).into());
    }
    if spec.presentation == Presentation::At && !g.is_unsigned() {
        return Err(VgError::SignedActionOnTypeA(spec.presentation, g.to_string()));
    }
    Ok(())
}

/// The action of `g` on `p`; unsigned permutations act through the
/// embedding `S_n ⊂ B_n`.
pub fn act(g: &SignedPermutation, p: &Polynomial, spec: &RingSpec) -> Result<Polynomial, VgError> {
    check_action(g, spec)?;
    spec.check(p)?;
    let mut cache: HashMap<Var, Polynomial> = HashMap::new();
    p.substitute(|v| Ok(cache.entry(v).or_insert_with(|| act_on_var(g, v)).clone()))
}

/// The action on a single monomial, without alphabet checks.
pub fn act_monomial(g: &SignedPermutation, m: &Monomial) -> Polynomial {
    Polynomial::monomial(m.clone())
        .substitute(|v| Ok(act_on_var(g, v)))
        .expect("linear images")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisChange {
    /// `v ↦ u⁺ + u⁻`, `w ↦ u⁺ − u⁻`.
    VwToPlusMinus,
    /// `u⁺ ↦ (v + w)/2`, `u⁻ ↦ (v − w)/2`.
    PlusMinusToVw,
}

fn change_var(v: Var, direction: BasisChange) -> Polynomial {
    let lin = |terms: &[(Var, crate::rational::Q)]| {
        Polynomial::from_terms(terms.iter().map(|(x, c)| (Monomial::var(*x), c.clone())))
    };
    match (direction, v) {
        (BasisChange::VwToPlusMinus, Var::V(i, j)) => {
            lin(&[(Var::UPlus(i, j), int(1)), (Var::UMinus(i, j), int(1))])
        }
        (BasisChange::VwToPlusMinus, Var::W(i, j)) => {
            lin(&[(Var::UPlus(i, j), int(1)), (Var::UMinus(i, j), int(-1))])
        }
        (BasisChange::PlusMinusToVw, Var::UPlus(i, j)) => {
            lin(&[(Var::V(i, j), frac(1, 2)), (Var::W(i, j), frac(1, 2))])
        }
        (BasisChange::PlusMinusToVw, Var::UMinus(i, j)) => {
            lin(&[(Var::V(i, j), frac(1, 2)), (Var::W(i, j), frac(-1, 2))])
        }
        _ => Polynomial::var(v),
    }
}

pub fn change_basis(p: &Polynomial, direction: BasisChange) -> Result<Polynomial, VgError> {
    let source = match direction {
        BasisChange::VwToPlusMinus => Alphabet::VW,
        BasisChange::PlusMinusToVw => Alphabet::UPlusMinus,
    };
    p.substitute(|v| {
        if v.in_alphabet(source) {
            Ok(change_var(v, direction))
        } else {
            Err(VgError::Parse(format!("{v} in a {direction:?} change of basis")))
        }
    })
}

/// `u_i ↦ 1`, `v_ij, w_ij ↦ t_ij`.
pub fn gamma(p: &Polynomial) -> Result<Polynomial, VgError> {
    p.substitute(|v| match v {
        Var::U(_) => Ok(Polynomial::one()),
        Var::V(i, j) | Var::W(i, j) => Ok(Polynomial::var(Var::T(i, j))),
        _ => Err(VgError::Parse(format!("{v} is outside the u, v, w alphabet"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        Polynomial::monomial(s.parse().unwrap())
    }

    fn g(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn bvw(n: usize) -> RingSpec {
        RingSpec::new(Presentation::Bvw, n)
    }

    #[test]
    fn golden_actions() {
        let tau1 = SignedPermutation::sign_change(2, 1);
        assert_eq!(act(&tau1, &poly("u1"), &bvw(2)).unwrap(), poly("u1").scale(&int(-1)));
        let sigma = g("+4,+3,-5,-1,+2");
        let spec = RingSpec::new(Presentation::Bu, 5);
        assert_eq!(
            act(&sigma, &poly("u+24"), &spec).unwrap(),
            poly("u-13").scale(&int(-1))
        );
        assert_eq!(
            act(&g("+2,+1"), &poly("w12"), &bvw(2)).unwrap(),
            poly("v12").scale(&int(-1))
        );
    }

    #[test]
    fn tau_table() {
        // τ_k negates v_ij when k = j and w_ij when k = i
        for k in 1..=3 {
            let tau = SignedPermutation::sign_change(3, k);
            for (i, j) in [(1u8, 2u8), (1, 3), (2, 3)] {
                let v = Polynomial::var(Var::V(i, j));
                let w = Polynomial::var(Var::W(i, j));
                let sv = if k == j as usize { -1 } else { 1 };
                let sw = if k == i as usize { -1 } else { 1 };
                assert_eq!(act(&tau, &v, &bvw(3)).unwrap(), v.scale(&int(sv)));
                assert_eq!(act(&tau, &w, &bvw(3)).unwrap(), w.scale(&int(sw)));
            }
        }
    }

    #[test]
    fn type_a_rejects_signs() {
        let spec = RingSpec::new(Presentation::At, 2);
        assert!(act(&g("-1,+2"), &poly("t12"), &spec).is_err());
        assert_eq!(
            act(&g("+2,+1"), &poly("t12"), &spec).unwrap(),
            poly("t12").scale(&int(-1))
        );
    }

    #[test]
    fn basis_change() {
        let b = change_basis(&poly("v12"), BasisChange::VwToPlusMinus).unwrap();
        assert_eq!(b, poly("u+12").add(&poly("u-12")));
        let inv = change_basis(&poly("u+12"), BasisChange::PlusMinusToVw).unwrap();
        assert_eq!(inv, poly("v12").add(&poly("w12")).scale(&frac(1, 2)));
        let p = poly("u1*v12*w23^2").add(&poly("w13"));
        let back = change_basis(
            &change_basis(&p, BasisChange::VwToPlusMinus).unwrap(),
            BasisChange::PlusMinusToVw,
        )
        .unwrap();
        assert_eq!(back, p);
        assert!(change_basis(&poly("t12"), BasisChange::VwToPlusMinus).is_err());
    }

    #[test]
    fn gamma_substitution() {
        assert_eq!(gamma(&poly("u1")).unwrap(), Polynomial::one());
        assert_eq!(gamma(&poly("v12*w23")).unwrap(), poly("t12*t23"));
        assert!(gamma(&poly("t12")).is_err());
    }
}
