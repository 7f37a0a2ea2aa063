//! Polynomials in `t, q` with symmetric-function coefficients: the
//! equivariant series, its branching rule, and the Jordan components.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};

use super::{l_lambda, schur::to_schur, SymFunc, SymFuncError, SymFuncJson};
use crate::combinatorics::{partitions_of, Partition};
use crate::rational::Q;
use crate::vg::BigradedSeries;

/// Schur coefficients keyed by `(t, q)` exponents.
pub type SchurSeries = BTreeMap<(usize, usize), BTreeMap<Partition, Q>>;

/// `Σ t^a q^b f_{a,b}`; the key `(a, b)` is the pair of exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamSeries {
    terms: BTreeMap<(usize, usize), SymFunc>,
}

impl ParamSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(f: SymFunc) -> Self {
        let mut s = Self::zero();
        s.add_term(0, 0, f);
        s
    }

    pub fn add_term(&mut self, a: usize, b: usize, f: SymFunc) {
        let slot = self.terms.entry((a, b)).or_default();
        slot.add_assign(&f);
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), SymFunc> {
        &self.terms
    }

    pub fn get(&self, a: usize, b: usize) -> SymFunc {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &ParamSeries) -> ParamSeries {
        let mut out = self.clone();
        for (&(a, b), f) in &other.terms {
            out.add_term(a, b, f.clone());
        }
        out
    }

    pub fn sub(&self, other: &ParamSeries) -> ParamSeries {
        self.add(&other.map(|f| f.scale(&-Q::from_integer(1.into()))))
    }

    /// Applies a linear map to every coefficient.
    pub fn map(&self, f: impl Fn(&SymFunc) -> SymFunc) -> ParamSeries {
        let mut out = ParamSeries::zero();
        for (&(a, b), g) in &self.terms {
            out.add_term(a, b, f(g));
        }
        out
    }

    /// Multiplies by `t^da q^db`.
    pub fn shift(&self, da: usize, db: usize) -> ParamSeries {
        ParamSeries {
            terms: self.terms.iter().map(|(&(a, b), f)| ((a + da, b + db), f.clone())).collect(),
        }
    }

    /// Replaces `t` by `t^2`.
    pub fn rescale_t2(&self) -> ParamSeries {
        ParamSeries {
            terms: self.terms.iter().map(|(&(a, b), f)| ((2 * a, b), f.clone())).collect(),
        }
    }

    /// Dimensions of the degree-`n` coefficients; `None` if one is not a
    /// nonnegative integer.
    pub fn dimensions(&self, n: usize) -> Option<BigradedSeries> {
        let mut out = BigradedSeries::default();
        for (&(a, b), f) in &self.terms {
            let d = f.dimension(n);
            if !d.is_integer() || d < Q::zero() {
                return None;
            }
            out.add(a, b, d.to_integer().to_u64()?);
        }
        Some(out)
    }

    pub fn to_schur(&self) -> Result<SchurSeries, SymFuncError> {
        self.terms.iter().map(|(&k, f)| Ok((k, to_schur(f)?))).collect()
    }

    /// `{t-exp: {q-exp: SymFunc}}`.
    pub fn to_json(&self) -> BTreeMap<String, BTreeMap<String, SymFuncJson>> {
        let mut out: BTreeMap<String, BTreeMap<String, SymFuncJson>> = BTreeMap::new();
        for (&(a, b), f) in &self.terms {
            out.entry(a.to_string()).or_default().insert(b.to_string(), f.to_json());
        }
        out
    }
}

impl fmt::Display for ParamSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, b), g)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "t^{a}q^{b}[{g}]")?;
        }
        Ok(())
    }
}

/// `Σ L_λ` over `λ ⊢ n` satisfying `keep`.
pub fn lie_sum(n: usize, keep: impl Fn(&Partition) -> bool) -> SymFunc {
    let mut out = SymFunc::zero();
    for l in partitions_of(n).iter().filter(|l| keep(l)) {
        out.add_assign(&l_lambda(l));
    }
    out
}

/// `Σ_{λ ⊢ n} L_λ t^{(n-odd(λ))/2} q^{n-ℓ(λ)}`.
pub fn equivariant_series(n: usize) -> ParamSeries {
    let mut out = ParamSeries::zero();
    for l in partitions_of(n) {
        out.add_term((n - l.odd_count()) / 2, n - l.len(), l_lambda(&l));
    }
    out
}

/// The same series keyed by `(n - odd(λ), n - ℓ(λ))`: total degree and
/// `v, w`-degree in the sign-invariant subring.
pub fn equivariant_series_bigraded(n: usize) -> ParamSeries {
    equivariant_series(n).rescale_t2()
}

/// Compares `∂IH_n/∂p₁` with `IH_{n-1} + tq p₁ (1 + q p₁ ∂/∂p₁) IH_{n-2}`;
/// on failure returns the difference.
pub fn check_branching(n: usize) -> Result<(), ParamSeries> {
    assert!(n >= 2, "the branching rule needs n >= 2");
    let lhs = equivariant_series(n).map(SymFunc::restrict);
    let prev2 = equivariant_series(n - 2);
    let inner = prev2.add(&prev2.map(|f| f.restrict().induct()).shift(0, 1));
    let rhs = equivariant_series(n - 1).add(&inner.map(SymFunc::induct).shift(1, 1));
    let diff = lhs.sub(&rhs);
    if diff.is_zero() {
        Ok(())
    } else {
        Err(diff)
    }
}

/// `P^(n)_m`: the sum of `L_λ` over `λ ⊢ n` with exactly `m` even parts.
pub fn jordan_p(n: usize, m: i64) -> SymFunc {
    if m < 0 {
        return SymFunc::zero();
    }
    lie_sum(n, |l| l.even_count() as i64 == m)
}
