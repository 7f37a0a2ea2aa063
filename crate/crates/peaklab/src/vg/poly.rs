//! Variables, monomials and sparse polynomials over the three alphabets.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::VgError;
use crate::rational::Q;

/// A ring generator. Indices are 1-based with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    T(u8, u8),
    U(u8),
    UPlus(u8, u8),
    UMinus(u8, u8),
    V(u8, u8),
    W(u8, u8),
}

/// Which generators a presentation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    T,
    UPlusMinus,
    VW,
}

impl Var {
    /// The level set containing this variable. `t_ij` lies in level `j-1`,
    /// every other two-index variable in level `j`, and `u_i` in level `i`.
    pub fn level(self) -> usize {
        match self {
            Var::T(_, j) => j as usize - 1,
            Var::U(i) => i as usize,
            Var::UPlus(_, j) | Var::UMinus(_, j) | Var::V(_, j) | Var::W(_, j) => j as usize,
        }
    }

    /// `(level, position within level, kind)`; the variable order.
    fn key(self) -> (usize, usize, u8) {
        match self {
            Var::T(i, _) => (self.level(), i as usize, 0),
            Var::U(_) => (self.level(), 0, 1),
            Var::UPlus(i, _) => (self.level(), 2 * i as usize - 1, 2),
            Var::UMinus(i, _) => (self.level(), 2 * i as usize, 3),
            Var::V(i, _) => (self.level(), 2 * i as usize - 1, 4),
            Var::W(i, _) => (self.level(), 2 * i as usize, 5),
        }
    }

    pub fn in_alphabet(self, alphabet: Alphabet) -> bool {
        matches!(
            (self, alphabet),
            (Var::T(..), Alphabet::T)
                | (Var::U(_), Alphabet::UPlusMinus | Alphabet::VW)
                | (Var::UPlus(..) | Var::UMinus(..), Alphabet::UPlusMinus)
                | (Var::V(..) | Var::W(..), Alphabet::VW)
        )
    }

    /// Largest index mentioned.
    pub fn max_index(self) -> usize {
        match self {
            Var::U(i) => i as usize,
            Var::T(_, j) | Var::UPlus(_, j) | Var::UMinus(_, j) | Var::V(_, j) | Var::W(_, j) => {
                j as usize
            }
        }
    }

    /// The index pair of a two-index variable.
    pub fn pair(self) -> Option<(usize, usize)> {
        match self {
            Var::U(_) => None,
            Var::T(i, j) | Var::UPlus(i, j) | Var::UMinus(i, j) | Var::V(i, j) | Var::W(i, j) => {
                Some((i as usize, j as usize))
            }
        }
    }

    fn valid(self) -> bool {
        match self.pair() {
            Some((i, j)) => 1 <= i && i < j,
            None => self.max_index() >= 1,
        }
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, i, j) = match *self {
            Var::U(i) => return write!(f, "u{i}"),
            Var::T(i, j) => ("t", i, j),
            Var::UPlus(i, j) => ("u+", i, j),
            Var::UMinus(i, j) => ("u-", i, j),
            Var::V(i, j) => ("v", i, j),
            Var::W(i, j) => ("w", i, j),
        };
        if i >= 10 || j >= 10 {
            write!(f, "{name}{i},{j}")
        } else {
            write!(f, "{name}{i}{j}")
        }
    }
}

impl FromStr for Var {
    type Err = VgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VgError::Parse(s.to_string());
        let (kind, rest) = ["u+", "u-", "t", "u", "v", "w"]
            .iter()
            .find_map(|p| s.strip_prefix(p).map(|r| (*p, r)))
            .ok_or_else(bad)?;
        let num = |x: &str| x.parse::<u8>().map_err(|_| bad());
        let var = if kind == "u" {
            Var::U(num(rest)?)
        } else {
            let (i, j) = match rest.split_once(',') {
                Some((a, b)) => (num(a)?, num(b)?),
                None if rest.len() == 2 => (num(&rest[..1])?, num(&rest[1..])?),
                None => return Err(bad()),
            };
            match kind {
                "t" => Var::T(i, j),
                "u+" => Var::UPlus(i, j),
                "u-" => Var::UMinus(i, j),
                "v" => Var::V(i, j),
                _ => Var::W(i, j),
            }
        };
        if var.valid() {
            Ok(var)
        } else {
            Err(bad())
        }
    }
}

/// A monomial: variables in increasing order with positive exponents.
///
/// Monomials are ordered by degree, then reverse lexicographically from the
/// smallest variable (graded reverse lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    pub fn from_vars(vars: impl IntoIterator<Item = Var>) -> Self {
        vars.into_iter()
            .fold(Monomial::one(), |m, v| m.mul(&Monomial::var(v)))
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |(_, e)| *e)
    }

    /// Variables with multiplicity, in increasing order.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat_n(v, e as usize))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    factors.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial { factors }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors
            .iter()
            .all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = Vec::with_capacity(other.factors.len());
        for &(v, e) in &other.factors {
            let d = self.exponent(v);
            match e.cmp(&d) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => factors.push((v, e - d)),
            }
        }
        if self.factors.iter().any(|&(v, _)| other.exponent(v) == 0) {
            return None;
        }
        Some(Monomial { factors })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for &(v, e) in &other.factors {
            let d = self.exponent(v);
            if e > d {
                m = m.mul(&Monomial {
                    factors: vec![(v, e - d)],
                });
            }
        }
        m
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn in_alphabet(&self, alphabet: Alphabet) -> bool {
        self.factors.iter().all(|(v, _)| v.in_alphabet(alphabet))
    }

    pub fn max_index(&self) -> usize {
        self.factors.iter().map(|(v, _)| v.max_index()).max().unwrap_or(0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.degree().cmp(&other.degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (va, ea) = a[i];
            let (vb, eb) = b[j];
            match va.cmp(&vb) {
                // the smallest variable where exponents differ decides:
                // the smaller exponent there wins
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal if ea != eb => return eb.cmp(&ea),
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = VgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut m = Monomial::one();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((a, e)) => (a, e.parse::<u32>().map_err(|_| VgError::Parse(s.to_string()))?),
                None => (factor, 1),
            };
            let v: Var = name.parse()?;
            if exp > 0 {
                m = m.mul(&Monomial {
                    factors: vec![(v, exp)],
                });
            }
        }
        Ok(m)
    }
}

/// A polynomial with exact rational coefficients and no zero terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, Q::one())
    }

    pub fn var(v: Var) -> Self {
        Polynomial::monomial(Monomial::var(v))
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
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

    /// Largest term in the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.last_key_value()
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Q)> {
        self.terms.pop_last()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in &other.terms {
            p.add_assign(&self.mul_term(m, c));
        }
        p
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    pub fn in_alphabet(&self, alphabet: Alphabet) -> bool {
        self.terms.keys().all(|m| m.in_alphabet(alphabet))
    }

    pub fn max_index(&self) -> usize {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    /// Ring homomorphism determined by the images of variables.
    pub fn substitute(
        &self,
        mut image: impl FnMut(Var) -> Result<Polynomial, VgError>,
    ) -> Result<Polynomial, VgError> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::term(Monomial::one(), c.clone());
            for &(v, e) in m.factors() {
                acc = acc.mul(&image(v)?.pow(e));
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c < &Q::zero();
            let abs = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
