//! Sparse exact-rational group algebras of `S_n` and `B_n`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{
    factorial, partitions_of, CombinatoricsError, Partition, Permutation, SignedPermutation,
};
use crate::rational::{self, Q};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("group mismatch: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("trace is not constant on the class {0}")]
    NotClassFunction(Partition),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error("malformed element: {0}")]
    Malformed(String),
}

/// Operations the algebra needs from a group element type.
pub trait GroupElement:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + FromStr<Err = CombinatoricsError> + Send + Sync + 'static
{
    /// Serialization tag: `"S"` or `"B"`.
    const TAG: &'static str;
    fn identity(n: usize) -> Self;
    fn degree(&self) -> usize;
    fn order(n: usize) -> usize;
    /// Composition; both arguments have the same degree.
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn rank(&self) -> usize;
    fn unrank(n: usize, r: usize) -> Self;
}

impl GroupElement for Permutation {
    const TAG: &'static str = "S";
    fn identity(n: usize) -> Self {
        Permutation::identity(n)
    }
    fn degree(&self) -> usize {
        self.n()
    }
    fn order(n: usize) -> usize {
        (1..=n).product()
    }
    fn mul(&self, other: &Self) -> Self {
        self.compose_unchecked(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn rank(&self) -> usize {
        Permutation::rank(self)
    }
    fn unrank(n: usize, r: usize) -> Self {
        Permutation::unrank(n, r)
    }
}

impl GroupElement for SignedPermutation {
    const TAG: &'static str = "B";
    fn identity(n: usize) -> Self {
        SignedPermutation::identity(n)
    }
    fn degree(&self) -> usize {
        self.n()
    }
    fn order(n: usize) -> usize {
        SignedPermutation::order(n)
    }
    fn mul(&self, other: &Self) -> Self {
        self.compose_unchecked(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn rank(&self) -> usize {
        SignedPermutation::rank(self)
    }
    fn unrank(n: usize, r: usize) -> Self {
        SignedPermutation::unrank(n, r)
    }
}

// covers S_7 (5040); ranks must fit in u16
const TABLE_MAX_ORDER: usize = 5040;

type TableCache = Mutex<HashMap<(&'static str, usize), Arc<Vec<u16>>>>;

/// Multiplication table by rank, built once per group and kept for reuse.
fn mul_table<G: GroupElement>(n: usize) -> Option<Arc<Vec<u16>>> {
    let order = G::order(n);
    if order > TABLE_MAX_ORDER {
        return None;
    }
    static TABLES: OnceLock<TableCache> = OnceLock::new();
    let mut cache = TABLES.get_or_init(Default::default).lock().unwrap();
    let table = cache.entry((G::TAG, n)).or_insert_with(|| {
        let elems: Vec<G> = (0..order).map(|r| G::unrank(n, r)).collect();
        let mut t = vec![0u16; order * order];
        t.par_chunks_mut(order).enumerate().for_each(|(i, row)| {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = elems[i].mul(&elems[j]).rank() as u16;
            }
        });
        Arc::new(t)
    });
    Some(Arc::clone(table))
}

/// A finite linear combination of group elements with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement<G: GroupElement> {
    n: usize,
    terms: BTreeMap<G, Q>,
}

pub type SnElement = GroupAlgebraElement<Permutation>;
pub type BnElement = GroupAlgebraElement<SignedPermutation>;

impl<G: GroupElement> GroupAlgebraElement<G> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(G::identity(n))
    }

    pub fn basis(g: G) -> Self {
        let n = g.degree();
        GroupAlgebraElement {
            n,
            terms: BTreeMap::from([(g, Q::one())]),
        }
    }

    /// Sums repeated elements and drops zero coefficients.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (G, Q)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(n);
        for (g, c) in terms {
            if g.degree() != n {
                return Err(CombinatoricsError::DegreeMismatch(n, g.degree()).into());
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, g: G, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<G, Q> {
        &self.terms
    }

    pub fn coefficient(&self, g: &G) -> Q {
        self.terms.get(g).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::GroupMismatch(
                format!("{}{}", G::TAG, self.n),
                format!("{}{}", G::TAG, other.n),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(g, x)| (g.clone(), x * c)).collect(),
        }
    }

    /// Convolution product `Σ c_g d_h (g h)`.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        Ok(self
            .multiply_integral(other)
            .unwrap_or_else(|| self.multiply_generic(other)))
    }

    fn multiply_generic(&self, other: &Self) -> Self {
        let mut acc: HashMap<G, Q> = HashMap::new();
        for (g, c) in &self.terms {
            for (h, d) in &other.terms {
                *acc.entry(g.mul(h)).or_insert_with(Q::zero) += c * d;
            }
        }
        GroupAlgebraElement {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Clears denominators and accumulates in machine integers; `None` when
    /// the numerators could overflow.
    fn multiply_integral(&self, other: &Self) -> Option<Self> {
        let (da, a) = integral_terms(&self.terms)?;
        let (db, b) = integral_terms(&other.terms)?;
        let max_a = a.iter().map(|(_, x)| x.unsigned_abs() as u128).max()?;
        let max_b = b.iter().map(|(_, x)| x.unsigned_abs() as u128).max()?;
        max_a
            .checked_mul(max_b)?
            .checked_mul(a.len().min(b.len()) as u128)
            .filter(|&m| m < i128::MAX as u128)?;

        let n = self.n;
        let order = G::order(n);
        let table = mul_table::<G>(n);
        let a_ranked: Vec<(usize, &G, i64)> = a.iter().map(|(g, x)| (g.rank(), *g, *x)).collect();
        let b_ranked: Vec<(usize, &G, i64)> = b.iter().map(|(g, x)| (g.rank(), *g, *x)).collect();

        let row = |(ra, ga, xa): &(usize, &G, i64), acc: &mut Vec<i128>| {
            for (rb, gb, xb) in &b_ranked {
                let idx = match &table {
                    Some(t) => t[ra * order + rb] as usize,
                    None => ga.mul(gb).rank(),
                };
                acc[idx] += *xa as i128 * *xb as i128;
            }
        };
        let acc = if a_ranked.len() * b_ranked.len() > 1 << 16 {
            a_ranked
                .par_chunks(64)
                .map(|chunk| {
                    let mut acc = vec![0i128; order];
                    chunk.iter().for_each(|t| row(t, &mut acc));
                    acc
                })
                .reduce(
                    || vec![0i128; order],
                    |mut x, y| {
                        x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                        x
                    },
                )
        } else {
            let mut acc = vec![0i128; order];
            a_ranked.iter().for_each(|t| row(t, &mut acc));
            acc
        };

        let den = da * db;
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, x)| *x != 0)
            .map(|(r, x)| (G::unrank(n, r), BigRational::new(BigInt::from(x), den.clone())))
            .collect();
        Some(GroupAlgebraElement { n, terms })
    }

    pub fn is_idempotent(&self) -> Result<bool, AlgebraError> {
        Ok(&self.multiply(self)? == self)
    }

    /// `χ(g) = Σ_h [h](g·h·e)`: the trace of left multiplication by `g` on
    /// the left ideal generated by the idempotent `e = self`.
    pub fn left_ideal_trace(&self, g: &G) -> Q {
        let g_inv = g.inv();
        let mut total = Q::zero();
        // [h](g h e) = e_x where g h x = h, i.e. x = h⁻¹ g⁻¹ h
        for r in 0..G::order(self.n) {
            let h = G::unrank(self.n, r);
            let x = h.inv().mul(&g_inv).mul(&h);
            if let Some(c) = self.terms.get(&x) {
                total += c;
            }
        }
        total
    }

    /// Dimension of the left ideal `kG·e`; requires `e` idempotent.
    pub fn left_ideal_dimension(&self) -> Result<Q, AlgebraError> {
        if !self.is_idempotent()? {
            return Err(AlgebraError::NotIdempotent);
        }
        Ok(self.left_ideal_trace(&G::identity(self.n)))
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            group: G::TAG.to_string(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(g, c)| TermJson {
                    w: g.to_string(),
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ElementJson) -> Result<Self, AlgebraError> {
        if json.group != G::TAG {
            return Err(AlgebraError::GroupMismatch(json.group.clone(), G::TAG.to_string()));
        }
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            let g: G = t.w.parse()?;
            let c = rational::parse(&t.c)
                .ok_or_else(|| AlgebraError::Malformed(format!("coefficient {:?}", t.c)))?;
            terms.push((g, c));
        }
        Self::from_terms(json.n, terms)
    }
}

/// Common denominator and integer numerators, if they fit in `i64`.
fn integral_terms<G: Ord>(terms: &BTreeMap<G, Q>) -> Option<(BigInt, Vec<(&G, i64)>)> {
    let den = terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = terms
        .iter()
        .map(|(g, c)| Some((g, (c.numer() * (&den / c.denom())).to_i64()?)))
        .collect::<Option<Vec<_>>>()?;
    Some((den, nums))
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub w: String,
    pub c: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ElementJson {
    pub group: String,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

/// The push-forward `kB_n → kS_n` induced by forgetting signs.
pub fn phi_push(a: &BnElement) -> SnElement {
    let mut acc: BTreeMap<Permutation, Q> = BTreeMap::new();
    for (w, c) in a.terms() {
        *acc.entry(w.forget_signs()).or_insert_with(Q::zero) += c;
    }
    GroupAlgebraElement {
        n: a.n(),
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

/// `(1/2^n) Σ` over the sign changes.
pub fn z2n_projector(n: usize) -> BnElement {
    let c = Q::new(BigInt::one(), BigInt::one() << n);
    GroupAlgebraElement {
        n,
        terms: (0..1usize << n)
            .map(|mask| (SignedPermutation::from_sign_mask(n, mask), c.clone()))
            .collect(),
    }
}

/// Outcome of checking a family for complete orthogonal idempotence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyDiagnosis {
    /// `(i, j)` pairs with `E_i E_j ≠ δ_ij E_i`, in lexicographic order.
    pub product_failures: Vec<(usize, usize)>,
    pub sums_to_identity: bool,
}

impl FamilyDiagnosis {
    pub fn passes(&self) -> bool {
        self.product_failures.is_empty() && self.sums_to_identity
    }

    pub fn idempotent(&self, i: usize) -> bool {
        !self.product_failures.contains(&(i, i))
    }

    pub fn orthogonal(&self) -> bool {
        self.product_failures.iter().all(|(i, j)| i == j)
    }
}

/// Checks `E_i E_j = δ_ij E_i` for every ordered pair and `Σ E_i = 1`.
pub fn idempotent_family_check<G: GroupElement>(
    family: &[GroupAlgebraElement<G>],
) -> Result<FamilyDiagnosis, AlgebraError> {
    let Some(first) = family.first() else {
        return Ok(FamilyDiagnosis {
            product_failures: Vec::new(),
            sums_to_identity: false,
        });
    };
    let n = first.n();
    let pairs: Vec<(usize, usize)> = (0..family.len())
        .flat_map(|i| (0..family.len()).map(move |j| (i, j)))
        .collect();
    let results = pairs
        .par_iter()
        .map(|&(i, j)| {
            let prod = family[i].multiply(&family[j])?;
            let ok = if i == j { prod == family[i] } else { prod.is_zero() };
            Ok(((i, j), ok))
        })
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    let mut sum = GroupAlgebraElement::zero(n);
    for e in family {
        sum = sum.add(e)?;
    }
    Ok(FamilyDiagnosis {
        product_failures: results.into_iter().filter(|(_, ok)| !ok).map(|(p, _)| p).collect(),
        sums_to_identity: sum == GroupAlgebraElement::identity(n),
    })
}

/// A class function on `S_n`, one value per cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Q) -> Self {
        ClassFunction {
            n,
            values: partitions_of(n).into_iter().map(|p| {
                let v = f(&p);
                (p, v)
            }).collect(),
        }
    }

    /// Builds from explicit values; returns the first cycle type with no
    /// value if the map does not cover every class.
    pub fn from_map(n: usize, mut values: BTreeMap<Partition, Q>) -> Result<Self, Partition> {
        let classes = partitions_of(n);
        if let Some(missing) = classes.iter().find(|p| !values.contains_key(p)) {
            return Err(missing.clone());
        }
        values.retain(|p, _| p.weight() == n);
        Ok(ClassFunction { n, values })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Q::zero())
    }

    /// The character of the regular representation.
    pub fn regular(n: usize) -> Self {
        let nf = Q::from_integer(factorial(n).into());
        Self::from_fn(n, |p| if p.parts().iter().all(|&x| x == 1) { nf.clone() } else { Q::zero() })
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Q::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |p| if (n - p.len()).is_multiple_of(2) { Q::one() } else { -Q::one() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> Q {
        self.values.get(cycle_type).cloned().unwrap_or_else(Q::zero)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Q> {
        &self.values
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        Self::from_fn(self.n, |p| self.value(p) + other.value(p))
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer())
    }

    /// Value at the identity.
    pub fn degree(&self) -> Q {
        self.value(&Partition::new(vec![1; self.n]).expect("ones"))
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.is_zero())
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(p, v)| format!("[{p}]={v}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Character of `kS_n·e` on each cycle type, evaluated at every group
/// element and checked to be constant on classes.
pub fn left_ideal_character(e: &SnElement) -> Result<ClassFunction, AlgebraError> {
    if !e.is_idempotent()? {
        return Err(AlgebraError::NotIdempotent);
    }
    let n = e.n();
    let traces: Vec<(Partition, Q)> = Permutation::all(n)
        .par_iter()
        .map(|g| (g.cycle_type(), e.left_ideal_trace(g)))
        .collect();
    let mut values: BTreeMap<Partition, Q> = BTreeMap::new();
    for (p, v) in traces {
        match values.get(&p) {
            Some(prev) if prev != &v => return Err(AlgebraError::NotClassFunction(p)),
            Some(_) => {}
            None => {
                values.insert(p, v);
            }
        }
    }
    Ok(ClassFunction { n, values })
}

/// True when every coefficient is a nonnegative integer multiple of `1`.
pub fn is_nonnegative_integer(q: &Q) -> bool {
    q.is_integer() && !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn s(w: &str) -> Permutation {
        w.parse().unwrap()
    }

    fn b(w: &str) -> SignedPermutation {
        w.parse().unwrap()
    }

    fn half_sum(sign: i64) -> SnElement {
        SnElement::from_terms(2, [(s("1,2"), frac(1, 2)), (s("2,1"), frac(sign, 2))]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = SnElement::from_terms(3, [(s("2,3,1"), frac(3, 7)), (s("1,3,2"), int(-2))]).unwrap();
        assert_eq!(a.multiply(&SnElement::identity(3)).unwrap(), a);
        assert_eq!(SnElement::identity(3).multiply(&a).unwrap(), a);
    }

    #[test]
    fn sign_projector_squares_to_itself() {
        let e = half_sum(-1);
        assert_eq!(e.multiply(&e).unwrap(), e);
    }

    #[test]
    fn mismatched_degrees() {
        let a = SnElement::identity(2);
        let c = SnElement::identity(3);
        assert!(matches!(a.multiply(&c), Err(AlgebraError::GroupMismatch(..))));
    }

    #[test]
    fn generic_and_integral_products_agree() {
        let big = Q::new(BigInt::from(1u64) << 70, BigInt::from(3));
        let a = BnElement::from_terms(2, [(b("-2,+1"), big.clone()), (b("+1,-2"), frac(1, 5))]).unwrap();
        let c = BnElement::from_terms(2, [(b("+2,+1"), frac(2, 3)), (b("-1,-2"), big)]).unwrap();
        assert!(a.multiply_integral(&c).is_none());
        assert_eq!(a.multiply(&c).unwrap(), a.multiply_generic(&c));
        let x = BnElement::from_terms(2, [(b("-2,+1"), frac(3, 4)), (b("+1,-2"), frac(1, 5))]).unwrap();
        let y = BnElement::from_terms(2, [(b("+2,+1"), frac(2, 3)), (b("-2,-1"), int(-7))]).unwrap();
        assert_eq!(x.multiply_integral(&y).unwrap(), x.multiply_generic(&y));
    }

    #[test]
    fn push_forward() {
        let plus = BnElement::basis(b("+1"));
        let minus = BnElement::basis(b("-1"));
        assert!(phi_push(&plus.sub(&minus).unwrap()).is_zero());
        assert_eq!(
            phi_push(&plus.add(&minus).unwrap()),
            SnElement::identity(1).scale(&int(2))
        );
    }

    #[test]
    fn projector_small() {
        let e = z2n_projector(1);
        let expected =
            BnElement::from_terms(1, [(b("+1"), frac(1, 2)), (b("-1"), frac(1, 2))]).unwrap();
        assert_eq!(e, expected);
        for n in 1..=3 {
            assert!(z2n_projector(n).is_idempotent().unwrap());
        }
        let e2 = z2n_projector(2);
        for g in SignedPermutation::all(2) {
            let g = BnElement::basis(g);
            assert_eq!(e2.multiply(&g).unwrap(), g.multiply(&e2).unwrap());
        }
        assert_eq!(phi_push(&z2n_projector(3)), SnElement::identity(3));
    }

    #[test]
    fn family_diagnostics() {
        let d = idempotent_family_check(&[SnElement::identity(3)]).unwrap();
        assert!(d.passes());
        let d = idempotent_family_check(&[half_sum(-1), half_sum(1)]).unwrap();
        assert!(d.passes());
        let d = idempotent_family_check(&[half_sum(1), half_sum(1)]).unwrap();
        assert!(!d.passes());
        assert!(!d.orthogonal());
        assert!(d.idempotent(0));
        assert!(!d.sums_to_identity);
    }

    #[test]
    fn ideal_characters_in_s2() {
        let regular = left_ideal_character(&SnElement::identity(2)).unwrap();
        assert_eq!(regular, ClassFunction::regular(2));
        assert_eq!(left_ideal_character(&half_sum(1)).unwrap(), ClassFunction::trivial(2));
        assert_eq!(left_ideal_character(&half_sum(-1)).unwrap(), ClassFunction::sign(2));
        let not_idem = SnElement::identity(2).scale(&int(2));
        assert_eq!(left_ideal_character(&not_idem), Err(AlgebraError::NotIdempotent));
    }

    #[test]
    fn json_round_trip() {
        let a = BnElement::from_terms(3, [(b("+2,-1,+3"), frac(1, 2)), (b("-3,+1,+2"), int(-4))]).unwrap();
        let json = serde_json::to_string(&a.to_json()).unwrap();
        assert!(json.starts_with(r#"{"group":"B","n":3,"terms":[{"w":"#));
        let back: ElementJson = serde_json::from_str(&json).unwrap();
        assert_eq!(BnElement::from_json(&back).unwrap(), a);
        assert!(SnElement::from_json(&back).is_err());
    }
}
