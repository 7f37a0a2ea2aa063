//! Symmetric functions stored in the power-sum basis, higher Lie
//! characters, and the equivariant series built from them.

mod hilb;
mod schur;
mod series;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{factorial, partitions_of, CombinatoricsError, Partition};
use crate::group_algebra::ClassFunction;
use crate::rational::{self, Q};

pub use hilb::{
    bihilb, bihilb_from_equivariant, bihilb_recursive, generating_function_check,
    generating_function_coefficient, sheffer_check, GeneratingMismatch, Substitution,
};
pub use schur::{character_value, schur, to_schur, CharacterTable};
pub use series::{
    check_branching, equivariant_series, equivariant_series_bigraded, jordan_p, lie_sum,
    ParamSeries,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("expected a homogeneous symmetric function")]
    NotHomogeneous,
    #[error("plethysm into a function with a constant term")]
    ConstantTerm,
    #[error("malformed symmetric function: {0}")]
    Malformed(String),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}

/// A finite sum `Σ c_λ p_λ` with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Q>,
}

fn to_q(n: num_bigint::BigUint) -> Q {
    Q::from_integer(BigInt::from(n))
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        Self::term(lambda, Q::one())
    }

    /// `p_k`.
    pub fn p_k(k: usize) -> Self {
        Self::p(Partition::new(vec![k]).expect("positive index"))
    }

    pub fn term(lambda: Partition, c: Q) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut f = SymFunc::zero();
        for (l, c) in terms {
            f.add_term(l, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Complete homogeneous `h_n = Σ p_λ / z_λ`.
    pub fn h(n: usize) -> Self {
        Self::from_terms(
            partitions_of(n)
                .into_iter()
                .map(|l| {
                    let z = to_q(l.z());
                    (l, Q::one() / z)
                }),
        )
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Partition::weight);
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// The degree-`n` piece.
    pub fn component(&self, n: usize) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &SymFunc) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    /// `p_λ p_μ = p_{λ ∪ μ}`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> SymFunc {
        (0..e).fold(SymFunc::one(), |acc, _| acc.multiply(self))
    }

    /// `p_m[f]`: every `p_k` becomes `p_{km}`.
    pub fn plethysm_p(&self, m: usize) -> SymFunc {
        assert!(m >= 1, "p_0 is not a power sum");
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.scaled(m), c.clone())).collect(),
        }
    }

    /// `h_m[f]` for homogeneous `f` of positive degree, from Newton's
    /// identity `m h_m = Σ_{k=1..m} p_k h_{m-k}` pushed through the plethysm.
    pub fn h_of(&self, m: usize) -> Result<SymFunc, SymFuncError> {
        match self.degree() {
            None if self.is_zero() => return Ok(if m == 0 { SymFunc::one() } else { SymFunc::zero() }),
            None => return Err(SymFuncError::NotHomogeneous),
            Some(0) => return Err(SymFuncError::ConstantTerm),
            Some(_) => {}
        }
        let mut hs = vec![SymFunc::one()];
        for j in 1..=m {
            let mut acc = SymFunc::zero();
            for k in 1..=j {
                acc.add_assign(&self.plethysm_p(k).multiply(&hs[j - k]));
            }
            hs.push(acc.scale(&rational::frac(1, j as i64)));
        }
        Ok(hs.pop().expect("nonempty"))
    }

    /// `∂/∂p₁`, the characteristic of restriction to `S_{n-1}`.
    pub fn restrict(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, c) in &self.terms {
            let m1 = l.multiplicity(1);
            if m1 > 0 {
                let rest = l.without_part(1).expect("has a part 1");
                out.add_term(rest, c * rational::int(m1 as i64));
            }
        }
        out
    }

    /// Multiplication by `p₁`, the characteristic of induction to `S_{n+1}`.
    pub fn induct(&self) -> SymFunc {
        self.multiply(&SymFunc::p_k(1))
    }

    /// The value at the identity of the class function in degree `n`.
    pub fn dimension(&self, n: usize) -> Q {
        self.coefficient(&Partition::new(vec![1; n]).expect("ones")) * to_q(factorial(n))
    }

    /// Inverse Frobenius characteristic of the degree-`n` piece.
    pub fn to_class_function(&self, n: usize) -> ClassFunction {
        ClassFunction::from_fn(n, |l| self.coefficient(l) * to_q(l.z()))
    }

    pub fn to_json(&self) -> SymFuncJson {
        SymFuncJson {
            deg: self.degree(),
            p: self
                .terms
                .iter()
                .map(|(l, c)| (l.to_string(), c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(json: &SymFuncJson) -> Result<SymFunc, SymFuncError> {
        let mut f = SymFunc::zero();
        for (k, v) in &json.p {
            let c = rational::parse(v).ok_or_else(|| SymFuncError::Malformed(v.clone()))?;
            f.add_term(k.parse()?, c);
        }
        if json.deg.is_some() && json.deg != f.degree() {
            return Err(SymFuncError::Malformed(format!("declared degree {:?}", json.deg)));
        }
        Ok(f)
    }
}

/// `{"deg":3,"p":{"1,1,1":"1/2","2,1":"-1/2"}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg: Option<usize>,
    pub p: BTreeMap<String, String>,
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if l.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "p[{l}]")?;
            } else {
                write!(f, "({c})p[{l}]")?;
            }
        }
        Ok(())
    }
}

/// `(1/n!) Σ_σ χ(σ) p_{λ(σ)} = Σ_λ χ(λ) p_λ / z_λ`.
pub fn frobenius(chi: &ClassFunction) -> SymFunc {
    SymFunc::from_terms(
        chi.values()
            .iter()
            .map(|(l, v)| (l.clone(), v / to_q(l.z()))),
    )
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `Lie_ℓ = (1/ℓ) Σ_{d | ℓ} μ(d) p_d^{ℓ/d}`.
pub fn lie_ell(l: usize) -> SymFunc {
    assert!(l >= 1, "Lie_0 is not defined");
    let mut out = SymFunc::zero();
    for d in (1..=l).filter(|d| l.is_multiple_of(*d)) {
        let mu = mobius(d);
        if mu != 0 {
            out.add_term(Partition::new(vec![d; l / d]).expect("positive"), rational::frac(mu, l as i64));
        }
    }
    out
}

/// `L_λ = Π_ℓ h_{m_ℓ}[Lie_ℓ]`, with `m_ℓ` the multiplicity of `ℓ` in `λ`.
pub fn l_lambda(lambda: &Partition) -> SymFunc {
    let mut out = SymFunc::one();
    for (part, &m) in lambda.multiplicities().iter().enumerate() {
        if m > 0 {
            let factor = lie_ell(part).h_of(m).expect("homogeneous of positive degree");
            out = out.multiply(&factor);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition;
    use crate::rational::{frac, int};

    fn p(parts: &[usize]) -> SymFunc {
        SymFunc::p(partition(parts))
    }

    #[test]
    fn products() {
        assert_eq!(p(&[1]).multiply(&p(&[1])), p(&[1, 1]));
        let h2 = SymFunc::h(2);
        assert_eq!(h2, p(&[1, 1]).add(&p(&[2])).scale(&frac(1, 2)));
        assert_eq!(
            h2.multiply(&p(&[1])),
            p(&[1, 1, 1]).add(&p(&[2, 1])).scale(&frac(1, 2))
        );
    }

    #[test]
    fn plethysm() {
        assert_eq!(p(&[3]).plethysm_p(2), p(&[6]));
        let e2 = p(&[1, 1]).sub(&p(&[2])).scale(&frac(1, 2));
        assert_eq!(e2.plethysm_p(2), p(&[2, 2]).sub(&p(&[4])).scale(&frac(1, 2)));
        assert_eq!(e2.plethysm_p(1), e2);
        assert_eq!(p(&[1]).h_of(2).unwrap(), SymFunc::h(2));
        assert_eq!(e2.h_of(0).unwrap(), SymFunc::one());
        assert_eq!(e2.h_of(1).unwrap(), e2);
        assert_eq!(SymFunc::one().h_of(2), Err(SymFuncError::ConstantTerm));
        assert_eq!(p(&[1]).add(&p(&[2])).h_of(2), Err(SymFuncError::NotHomogeneous));
    }

    #[test]
    fn lie() {
        assert_eq!(lie_ell(1), p(&[1]));
        assert_eq!(lie_ell(2), p(&[1, 1]).sub(&p(&[2])).scale(&frac(1, 2)));
        assert_eq!(lie_ell(3), p(&[1, 1, 1]).sub(&p(&[3])).scale(&frac(1, 3)));
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(l_lambda(&partition(&[1, 1])), SymFunc::h(2));
        assert_eq!(
            l_lambda(&partition(&[2, 1])),
            p(&[1, 1, 1]).sub(&p(&[2, 1])).scale(&frac(1, 2))
        );
    }

    #[test]
    fn frobenius_characteristic() {
        assert_eq!(frobenius(&ClassFunction::regular(4)), p(&[1]).pow(4));
        assert_eq!(frobenius(&ClassFunction::trivial(2)), SymFunc::h(2));
        assert_eq!(
            frobenius(&ClassFunction::sign(2)),
            p(&[1, 1]).sub(&p(&[2])).scale(&frac(1, 2))
        );
        let chi = ClassFunction::sign(4);
        assert_eq!(frobenius(&chi).to_class_function(4), chi);
    }

    #[test]
    fn branching_operators() {
        assert_eq!(p(&[1, 1, 1]).restrict(), p(&[1, 1]).scale(&int(3)));
        assert_eq!(SymFunc::h(4).restrict(), SymFunc::h(3));
        let f = p(&[2, 1]).add(&p(&[3]).scale(&frac(2, 3)));
        assert_eq!(f.induct().restrict(), f.add(&f.restrict().induct()));
        assert_eq!(SymFunc::h(3).dimension(3), int(1));
    }

    #[test]
    fn json_round_trip() {
        let f = p(&[1, 1, 1]).sub(&p(&[2, 1])).scale(&frac(1, 2));
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(text, r#"{"deg":3,"p":{"1,1,1":"1/2","2,1":"-1/2"}}"#);
        let back: SymFuncJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SymFunc::from_json(&back).unwrap(), f);
        let bad: SymFuncJson = serde_json::from_str(r#"{"deg":2,"p":{"1":"1"}}"#).unwrap();
        assert!(SymFunc::from_json(&bad).is_err());
    }
}
