//! Partitions, permutations and signed permutations, with the statistics
//! (descents, peaks, cycle types, odd and even parts) used by the rest of the
//! crate.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// An integer partition with weakly decreasing positive parts.
///
/// Ordering is by weight first, then reverse lexicographic on the parts, so
/// `partitions_of(4)` is `4, 31, 22, 211, 1111`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.contains(&0) {
            return Err(CombinatoricsError::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `m[i]` is the number of parts equal to `i` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let top = self.parts.first().copied().unwrap_or(0);
        let mut m = vec![0; top + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Number of odd parts.
    pub fn odd_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Number of even parts.
    pub fn even_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn odd_parts(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|p| p % 2 == 1).collect(),
        }
    }

    pub fn even_parts(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|p| p % 2 == 0).collect(),
        }
    }

    /// True when every part is odd (the empty partition counts).
    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Removes one copy of `part`, if present.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// Multiplies every part by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * k).collect(),
        }
    }

    /// Size of the centralizer of a permutation of this cycle type.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigUint::from(i) * BigUint::from(k);
            }
        }
        z
    }

    /// Number of permutations of cycle type `self` in `S_{|self|}`.
    pub fn class_size(&self) -> BigUint {
        factorial(self.weight()) / self.z()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.parts.iter())
    }
}

impl FromStr for Partition {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CombinatoricsError::InvalidPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Convenience constructor for tests and tables; panics on a zero part.
pub fn partition(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("positive parts")
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered pair of partitions: sizes of loopless and looped components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoublePartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl DoublePartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        DoublePartition { plus, minus }
    }

    pub fn weight(&self) -> usize {
        self.plus.weight() + self.minus.weight()
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.plus, self.minus)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn write_joined<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn small_factorial(n: usize) -> usize {
    (1..=n).product()
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    window: Vec<u8>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let n = window.len();
        if n > 127 {
            return Err(CombinatoricsError::InvalidWindow(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(CombinatoricsError::InvalidWindow(format!("{window:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            window: window.into_iter().map(|v| v as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n as u8).collect(),
        }
    }

    /// The permutation whose cycles are consecutive runs of the given
    /// lengths, e.g. `(2,1)` gives `(1 2)(3)`.
    pub fn with_cycle_type(shape: &Partition) -> Self {
        let n = shape.weight();
        let mut window = vec![0u8; n];
        let mut start = 0;
        for &len in shape.parts() {
            for k in 0..len {
                let next = if k + 1 == len { start } else { start + k + 1 };
                window[start + k] = (next + 1) as u8;
            }
            start += len;
        }
        Permutation { window }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> Vec<usize> {
        self.window.iter().map(|&v| v as usize).collect()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1] as usize
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, CombinatoricsError> {
        if self.n() != other.n() {
            return Err(CombinatoricsError::DegreeMismatch(self.n(), other.n()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            window: other
                .window
                .iter()
                .map(|&j| self.window[j as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0u8; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { window }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.window[i] as usize - 1;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Number of cycles.
    pub fn cycles(&self) -> usize {
        self.cycle_type().len()
    }

    /// Number of odd-length cycles.
    pub fn odd_cycles(&self) -> usize {
        self.cycle_type().odd_count()
    }

    /// Positions `i` in `1..n` with `w(i) > w(i+1)`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        (1..self.n())
            .filter(|&i| self.window[i - 1] > self.window[i])
            .collect()
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    /// Positions `i` in `1..n` with `w(i-1) < w(i) > w(i+1)`, where `w(0) = 0`.
    pub fn peak_set(&self) -> BTreeSet<usize> {
        (1..self.n())
            .filter(|&i| {
                let prev = if i == 1 { 0 } else { self.window[i - 2] };
                prev < self.window[i - 1] && self.window[i - 1] > self.window[i]
            })
            .collect()
    }

    /// All of `S_n`, lexicographic on windows.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..small_factorial(n)).map(|r| Permutation::unrank(n, r)).collect()
    }

    /// Position in the lexicographic enumeration of `S_n`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut used = 0u128;
        let mut r = 0;
        for (pos, &v) in self.window.iter().enumerate() {
            let smaller_free = (1..v).filter(|&u| used & (1 << u) == 0).count();
            r += smaller_free * small_factorial(n - 1 - pos);
            used |= 1 << v;
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> Permutation {
        let mut free: Vec<u8> = (1..=n as u8).collect();
        let mut window = Vec::with_capacity(n);
        for pos in 0..n {
            let block = small_factorial(n - 1 - pos);
            window.push(free.remove(r / block));
            r %= block;
        }
        Permutation { window }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.window.iter())
    }
}

impl FromStr for Permutation {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let window = s
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CombinatoricsError::InvalidWindow(s.to_string()))?;
        Permutation::new(window)
    }
}

/// A signed permutation: an element of the hyperoctahedral group `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self, CombinatoricsError> {
        let n = window.len();
        if n > 127 {
            return Err(CombinatoricsError::InvalidWindow(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(CombinatoricsError::InvalidWindow(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation {
            window: window.into_iter().map(|v| v as i8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i8).collect(),
        }
    }

    /// The sign change `τ_i`, negating position `i` (1-based).
    pub fn sign_change(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.window[i - 1] = -w.window[i - 1];
        w
    }

    /// The sign-change element negating exactly the positions in `mask`
    /// (bit `i-1` for position `i`).
    pub fn from_sign_mask(n: usize, mask: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i8)
                .map(|i| if mask >> (i - 1) & 1 == 1 { -i } else { i })
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> Vec<i64> {
        self.window.iter().map(|&v| v as i64).collect()
    }

    /// Image of `i`, with `w(-i) = -w(i)`.
    pub fn apply(&self, i: i64) -> i64 {
        let v = self.window[i.unsigned_abs() as usize - 1] as i64;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation, CombinatoricsError> {
        if self.n() != other.n() {
            return Err(CombinatoricsError::DegreeMismatch(self.n(), other.n()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            window: other
                .window
                .iter()
                .map(|&j| {
                    let v = self.window[j.unsigned_abs() as usize - 1];
                    if j < 0 {
                        -v
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0i8; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let i = (i + 1) as i8;
            window[v.unsigned_abs() as usize - 1] = if v < 0 { -i } else { i };
        }
        SignedPermutation { window }
    }

    /// Descents with `s_0` the sign change in position 1: `0` when
    /// `w(1) < 0`, and `i ≥ 1` when `w(i) > w(i+1)`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut d = BTreeSet::new();
        if self.window.first().is_some_and(|&v| v < 0) {
            d.insert(0);
        }
        for i in 1..self.n() {
            if self.window[i - 1] > self.window[i] {
                d.insert(i);
            }
        }
        d
    }

    pub fn des(&self) -> usize {
        self.descent_set().len()
    }

    pub fn forget_signs(&self) -> Permutation {
        Permutation {
            window: self.window.iter().map(|v| v.unsigned_abs()).collect(),
        }
    }

    /// True for the `2^n` pure sign changes.
    pub fn is_sign_change(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, v)| v.unsigned_abs() as usize == i + 1)
    }

    /// True when no entry is negative, i.e. the element lies in `S_n`.
    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// All of `B_n`, lexicographic on windows.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        (0..Self::order(n)).map(|r| Self::unrank(n, r)).collect()
    }

    pub fn order(n: usize) -> usize {
        small_factorial(n) << n
    }

    /// Position in the lexicographic enumeration of `B_n`.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut used = 0u128;
        let mut r = 0;
        for (pos, &v) in self.window.iter().enumerate() {
            let remaining = n - pos;
            let smaller = free_signed_values(n, used)
                .take_while(|&u| u < v as i64)
                .count();
            r += smaller * (small_factorial(remaining - 1) << (remaining - 1));
            used |= 1 << v.unsigned_abs();
        }
        r
    }

    pub fn unrank(n: usize, mut r: usize) -> SignedPermutation {
        let mut used = 0u128;
        let mut window = Vec::with_capacity(n);
        for pos in 0..n {
            let remaining = n - pos;
            let block = small_factorial(remaining - 1) << (remaining - 1);
            let v = free_signed_values(n, used)
                .nth(r / block)
                .expect("rank in range");
            r %= block;
            used |= 1 << v.unsigned_abs();
            window.push(v as i8);
        }
        SignedPermutation { window }
    }
}

/// Unused signed values in increasing order.
fn free_signed_values(n: usize, used: u128) -> impl Iterator<Item = i64> {
    let n = n as i64;
    (-n..=n).filter(move |&u| u != 0 && used & (1 << u.unsigned_abs()) == 0)
}

impl From<&Permutation> for SignedPermutation {
    fn from(p: &Permutation) -> Self {
        SignedPermutation {
            window: p.window.iter().map(|&v| v as i8).collect(),
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v:+}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = CombinatoricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let window = s
            .split(',')
            .map(|x| x.trim().trim_start_matches('+').parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CombinatoricsError::InvalidWindow(s.to_string()))?;
        SignedPermutation::new(window)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn signed(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let p3: Vec<String> = partitions_of(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(p3, ["3", "2,1", "1,1,1"]);
        assert_eq!(partitions_of(4).len(), 5);
        // p(n) for n up to 12
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn partition_order_is_sorted_enumeration() {
        for n in 0..8 {
            let ps = partitions_of(n);
            let mut sorted = ps.clone();
            sorted.sort();
            assert_eq!(ps, sorted);
        }
    }

    #[test]
    fn partition_text_round_trip() {
        let p: Partition = "1,3,1".parse().unwrap();
        assert_eq!(p.to_string(), "3,1,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_statistics() {
        let p = partition(&[4, 3, 2, 1, 1]);
        assert_eq!(p.weight(), 11);
        assert_eq!(p.len(), 5);
        assert_eq!(p.odd_count(), 3);
        assert_eq!(p.even_count(), 2);
        assert_eq!(p.odd_parts(), partition(&[3, 1, 1]));
        assert_eq!(p.even_parts(), partition(&[4, 2]));
        assert_eq!(p.multiplicity(1), 2);
        // z = 4 * 3 * 2 * (1^2 * 2!)
        assert_eq!(p.z(), BigUint::from(48u32));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(partition(&[1, 1, 1]).class_size(), BigUint::from(1u32));
        assert_eq!(partition(&[2, 1]).class_size(), BigUint::from(3u32));
        assert_eq!(partition(&[3, 1]).class_size(), BigUint::from(8u32));
        for n in 0..=9 {
            let total: BigUint = partitions_of(n).iter().map(|p| p.class_size()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn odd_count_parity() {
        for n in 0..=10 {
            for p in partitions_of(n) {
                assert_eq!(p.odd_count() % 2, n % 2);
            }
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), partition(&[1, 1, 1, 1]));
        assert_eq!(perm("2,1,3").cycle_type(), partition(&[2, 1]));
        assert_eq!(perm("2,3,1").cycle_type(), partition(&[3]));
        for n in 1..=6 {
            for p in partitions_of(n) {
                assert_eq!(Permutation::with_cycle_type(&p).cycle_type(), p);
            }
        }
    }

    #[test]
    fn descents_and_peaks() {
        assert!(Permutation::identity(3).descent_set().is_empty());
        assert_eq!(perm("2,1,3").descent_set(), BTreeSet::from([1]));
        assert_eq!(perm("3,2,1").descent_set(), BTreeSet::from([1, 2]));
        assert!(Permutation::identity(3).peak_set().is_empty());
        assert_eq!(perm("1,3,2").peak_set(), BTreeSet::from([2]));
        assert_eq!(perm("2,1,3").peak_set(), BTreeSet::from([1]));
    }

    #[test]
    fn peaks_are_descents() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let d = w.descent_set();
                let p = w.peak_set();
                assert!(p.is_subset(&d));
                assert_eq!(p.contains(&1), d.contains(&1));
            }
        }
    }

    #[test]
    fn signed_descents() {
        assert!(signed("+1,+2").descent_set().is_empty());
        assert_eq!(signed("-1").descent_set(), BTreeSet::from([0]));
        assert_eq!(signed("+2,+1").descent_set(), BTreeSet::from([1]));
        assert_eq!(signed("+1,-2").descent_set(), BTreeSet::from([1]));
    }

    #[test]
    fn composition() {
        let s = perm("2,1");
        assert_eq!(s.compose(&s).unwrap(), Permutation::identity(2));
        let t1 = SignedPermutation::sign_change(3, 1);
        assert_eq!(t1.compose(&t1).unwrap(), SignedPermutation::identity(3));
        assert_eq!(
            signed("+2,+1").compose(&signed("-1,+2")).unwrap(),
            signed("-2,+1")
        );
        assert_eq!(
            perm("1,2").compose(&perm("1,2,3")),
            Err(CombinatoricsError::DegreeMismatch(2, 3))
        );
    }

    #[test]
    fn signed_apply_matches_composition() {
        let a = signed("+3,-1,+2");
        let b = signed("-2,+3,-1");
        let c = a.compose(&b).unwrap();
        for i in 1..=3i64 {
            assert_eq!(c.apply(i), a.apply(b.apply(i)));
            assert_eq!(c.apply(-i), -c.apply(i));
        }
    }

    #[test]
    fn forgetting_signs() {
        assert_eq!(signed("-1,+2").forget_signs(), perm("1,2"));
        assert_eq!(signed("+4,+3,-5,-1,+2").forget_signs(), perm("4,3,5,1,2"));
    }

    #[test]
    fn forget_signs_kernel() {
        for n in 1..=4 {
            let kernel = SignedPermutation::all(n)
                .into_iter()
                .filter(|w| w.forget_signs() == Permutation::identity(n))
                .count();
            assert_eq!(kernel, 1 << n);
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(signed("+4,+3,-5,-1,+2").to_string(), "+4,+3,-5,-1,+2");
        assert_eq!(perm("2,1,3").to_string(), "2,1,3");
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("+1,-1".parse::<SignedPermutation>().is_err());
        assert!("0,1".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn enumeration_is_lexicographic_and_ranked() {
        for n in 0..=5 {
            let s = Permutation::all(n);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
            for (r, p) in s.iter().enumerate() {
                assert_eq!(p.rank(), r);
            }
        }
        for n in 0..=4 {
            let b = SignedPermutation::all(n);
            assert_eq!(b.len(), SignedPermutation::order(n));
            assert!(b.windows(2).all(|w| w[0] < w[1]));
            for (r, w) in b.iter().enumerate() {
                assert_eq!(w.rank(), r);
            }
        }
    }

    #[test]
    fn inverses() {
        for w in SignedPermutation::all(3) {
            assert_eq!(w.compose(&w.inverse()).unwrap(), SignedPermutation::identity(3));
        }
        for w in Permutation::all(4) {
            assert_eq!(w.inverse().compose(&w).unwrap(), Permutation::identity(4));
        }
    }
}
