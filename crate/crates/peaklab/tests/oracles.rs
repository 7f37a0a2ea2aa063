//! Library results against brute-force counts written out here.

use std::collections::BTreeMap;

use peaklab::combinatorics::{partitions_of, Permutation};
use peaklab::group_algebra::{left_ideal_character, ClassFunction};
use peaklab::idempotents::{eulerian_a, peak_idempotents};
use peaklab::rational::{int, Q};
use peaklab::symfunc::{bihilb, frobenius, jordan_p, lie_sum, SymFunc};
use peaklab::vg::{
    component_basis, fixed_basis, gamma, hilbert_series, pairing_phi, standard_basis, BigradedSeries, Monomial,
    Polynomial, Presentation, RingSpec, Selector,
};

/// Cycle lengths of a window, read off by hand.
fn cycle_lengths(w: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; w.len()];
    let mut out = Vec::new();
    for start in 0..w.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = w[i] - 1;
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

fn all_windows(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &out {
            for x in (1..=n).filter(|x| !w.contains(x)) {
                let mut v: Vec<usize> = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `Σ_σ t^{(n - odd)/2} q^{n - cyc}` by enumeration.
fn counted_bihilb(n: usize) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for w in all_windows(n) {
        let c = cycle_lengths(&w);
        let odd = c.iter().filter(|&&l| l % 2 == 1).count();
        *out.entry(((n - odd) / 2, n - c.len())).or_insert(0) += 1;
    }
    out
}

fn poly_product(factors: impl Iterator<Item = u64>) -> Vec<u64> {
    let mut acc = vec![1u64];
    for a in factors {
        let mut next = vec![0u64; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i] += c;
            next[i + 1] += a * c;
        }
        acc = next;
    }
    acc
}

#[test]
fn hilbert_series_are_products() {
    for n in 1..=6 {
        let a = poly_product(1..n as u64);
        let b = poly_product((1..=n as u64).map(|i| 2 * i - 1));
        assert_eq!(hilbert_series(&RingSpec::new(Presentation::At, n)), a);
        for p in [Presentation::Bu, Presentation::Bvw, Presentation::BvwGr] {
            assert_eq!(hilbert_series(&RingSpec::new(p, n)), b, "{p} n = {n}");
        }
        assert_eq!(standard_basis(&RingSpec::new(Presentation::At, n)).len() as u64, a.iter().sum::<u64>());
    }
}

#[test]
fn bigraded_series_counts_permutations() {
    for n in 0..=7 {
        assert_eq!(bihilb(n).coeffs(), &counted_bihilb(n), "n = {n}");
    }
}

#[test]
fn fixed_components_match_counts() {
    for n in 1..=5 {
        let spec = RingSpec::new(Presentation::BvwGr, n);
        let mut got = BigradedSeries::default();
        for k in 0..=2 * n {
            for l in 0..=n {
                let len = component_basis(&spec, &Selector::FixedBidegree(k, l)).unwrap().len() as u64;
                if len > 0 {
                    assert_eq!(k % 2, 0, "odd total degree {k}");
                    got.add(k / 2, l, len);
                }
            }
        }
        assert_eq!(got.coeffs(), &counted_bihilb(n), "n = {n}");
    }
}

#[test]
fn peak_ideal_dimensions_count_odd_cycles() {
    for n in 1..=5 {
        let family = peak_idempotents(n).unwrap();
        for k in 0..=n {
            let count = all_windows(n)
                .iter()
                .filter(|w| cycle_lengths(w).iter().filter(|&&l| l % 2 == 1).count() == n - k)
                .count();
            let pi = &family.elements[n - k];
            let dim = if pi.is_zero() { int(0) } else { left_ideal_character(pi).unwrap().degree() };
            assert_eq!(dim, int(count as i64), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn eulerian_ideals_carry_lie_sums() {
    // E^A_k spans the component with n - k cycles; its character is the
    // sum of L_λ over λ with k + 1 parts
    for n in 1..=4 {
        let family = eulerian_a(n).unwrap();
        for (k, e) in family.elements.iter().enumerate() {
            let chi = left_ideal_character(e).unwrap();
            let expected = lie_sum(n, |l| l.len() == k + 1).to_class_function(n);
            assert_eq!(chi, expected, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn frobenius_of_regular_is_p1_power() {
    for n in 1..=6 {
        let f = frobenius(&ClassFunction::regular(n));
        assert_eq!(f, SymFunc::p_k(1).pow(n));
        assert_eq!(frobenius(&ClassFunction::trivial(n)), SymFunc::h(n));
    }
}

#[test]
fn all_odd_component_dimension() {
    for n in 1..=7 {
        let count = all_windows(n)
            .iter()
            .filter(|w| cycle_lengths(w).iter().all(|l| l % 2 == 1))
            .count();
        assert_eq!(jordan_p(n, 0).dimension(n), int(count as i64), "n = {n}");
        let total: Q = (0..=n as i64).map(|m| jordan_p(n, m).dimension(n)).sum();
        assert_eq!(total, int(all_windows(n).len() as i64));
    }
}

#[test]
fn pairing_inverts_gamma() {
    for n in 1..=5 {
        let spec = RingSpec::new(Presentation::At, n);
        let basis = standard_basis(&spec);
        let mut images: Vec<Monomial> = basis.iter().map(|m| pairing_phi(m, n).unwrap()).collect();
        for (m, q) in basis.iter().zip(&images) {
            assert_eq!(gamma(&Polynomial::monomial(q.clone())).unwrap(), Polynomial::monomial(m.clone()));
        }
        images.sort();
        let mut fixed = fixed_basis(n);
        fixed.sort();
        assert_eq!(images, fixed, "n = {n}");
    }
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 1..=8 {
        let total: u64 = partitions_of(n).iter().map(|l| l.class_size().try_into().unwrap_or(0u64)).sum();
        assert_eq!(total as usize, Permutation::all(n).len());
    }
}
