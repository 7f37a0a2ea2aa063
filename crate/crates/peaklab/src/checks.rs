//! Named verification checks, their registry, and the report format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{factorial, partition, partitions_of, Partition, Permutation, SignedPermutation};
use crate::group_algebra::{idempotent_family_check, left_ideal_character, FamilyDiagnosis};
use crate::idempotents::{constant_on_statistic, eulerian_a, eulerian_b, peak_idempotents};
use crate::symfunc::{
    bihilb, bihilb_from_equivariant, bihilb_recursive, check_branching, equivariant_series,
    generating_function_coefficient, jordan_p, l_lambda, lie_sum, sheffer_check, to_schur,
    Substitution, SymFunc,
};
use crate::vg::{
    act, component_basis, factor_quadratics, fixed_basis, fixed_part_character, gamma,
    hilbert_series, pairing_phi, standard_basis, subspace_character, BigradedSeries, Monomial,
    Polynomial, Presentation, Reducer, RingSpec, Selector, Var, s_pair_failures,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("check {id}: range {lo}..={hi} is outside {min}..={cap}")]
    OutOfRange {
        id: String,
        lo: usize,
        hi: usize,
        min: usize,
        cap: usize,
    },
    #[error("unknown report format {0:?}")]
    UnknownFormat(String),
    #[error("cannot write report to {path}: {message}")]
    Io { path: String, message: String },
}

/// One registered check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSpec {
    pub id: &'static str,
    pub description: &'static str,
    pub criterion: u8,
    pub modules: &'static [&'static str],
    /// Smallest meaningful `n`.
    pub min: usize,
    pub default_range: (usize, usize),
    /// Largest `n` accepted.
    pub cap: usize,
    pub anchor: &'static str,
}

const REGISTRY: &[CheckSpec] = &[
    CheckSpec {
        id: "hilbert-products",
        description: "Hilbert series of every presentation factor as products; basis sizes n! and 2^n n!; quadratic Groebner bases",
        criterion: 1,
        modules: &["vg-rings", "combinatorics"],
        min: 1,
        default_range: (1, 8),
        cap: 8,
        anchor: "(1+t)(1+3t)(1+5t)⋯(1+(2n−1)t)",
    },
    CheckSpec {
        id: "eulerian-a-family",
        description: "type A Eulerian idempotents are complete, orthogonal, and constant on descent sets",
        criterion: 2,
        modules: &["idempotents", "group-algebra"],
        min: 1,
        default_range: (1, 6),
        cap: 7,
        anchor: "Σ t^{k+1} E^A_k = Σ_σ C(t−1+n−des(σ), n)·σ",
    },
    CheckSpec {
        id: "eulerian-b-orthogonality",
        description: "type B Eulerian idempotents are complete, orthogonal, and constant on type B descent sets",
        criterion: 2,
        modules: &["idempotents", "group-algebra"],
        min: 1,
        default_range: (1, 5),
        cap: 5,
        anchor: "Σ t^k E^B_k = Σ_w C((t−1)/2 + n − des(w), n)·w",
    },
    CheckSpec {
        id: "peak-family",
        description: "peak idempotents are complete, orthogonal, and constant on peak sets",
        criterion: 3,
        modules: &["idempotents", "group-algebra"],
        min: 1,
        default_range: (1, 5),
        cap: 5,
        anchor: "π := φ(E^B)",
    },
    CheckSpec {
        id: "peak-vanishing",
        description: "π_k vanishes exactly when k and n have different parity",
        criterion: 3,
        modules: &["idempotents"],
        min: 1,
        default_range: (1, 5),
        cap: 5,
        anchor: "unless k ≡ n mod 2",
    },
    CheckSpec {
        id: "peak-character",
        description: "character of kS_n π_j equals the sum of L_λ over odd(λ) = j; dimension counts permutations with j odd cycles",
        criterion: 4,
        modules: &["idempotents", "group-algebra", "symfunc"],
        min: 1,
        default_range: (1, 5),
        cap: 5,
        anchor: "trace(σ|_V)",
    },
    CheckSpec {
        id: "fixed-basis",
        description: "the sign-invariant standard monomials number n!, lie in products of the quadratics, are invariant, and sit in degrees 0 mod 4",
        criterion: 5,
        modules: &["vg-rings"],
        min: 1,
        default_range: (1, 7),
        cap: 7,
        anchor: "𝒱 ∩ ∏𝒬",
    },
    CheckSpec {
        id: "bigraded-table",
        description: "bigraded dimensions of the invariant subring against the tabulated values and the recursion",
        criterion: 6,
        modules: &["vg-rings", "symfunc"],
        min: 1,
        default_range: (2, 4),
        cap: 7,
        anchor: "1+t²(3q+2q²)",
    },
    CheckSpec {
        id: "bigraded-equivariance",
        description: "S_n-character of each bidegree component of the invariant subring equals the matching sum of L_λ",
        criterion: 7,
        modules: &["vg-rings", "symfunc"],
        min: 1,
        default_range: (1, 5),
        cap: 6,
        anchor: "bidegree (k,ℓ)=(deg(q), deg(γ(q)))",
    },
    CheckSpec {
        id: "flat-orbit-fixed-character",
        description: "sign-invariant part of each flat-orbit component has character Σ_{oddparts(λ)=μ} L_λ",
        criterion: 8,
        modules: &["vg-rings", "symfunc"],
        min: 1,
        default_range: (1, 5),
        cap: 6,
        anchor: "indexed by {\\it flat orbits}",
    },
    CheckSpec {
        id: "pairing-golden",
        description: "worked examples of the pairing map (n = 3, 4, 10; other n are skipped)",
        criterion: 9,
        modules: &["vg-rings"],
        min: 1,
        default_range: (3, 10),
        cap: 10,
        anchor: "t₁₂ < t₁₃ < ⋯ < t_{n−1,n}",
    },
    CheckSpec {
        id: "pairing-inverse",
        description: "γ∘φ is the identity on the type A standard basis",
        criterion: 9,
        modules: &["vg-rings"],
        min: 1,
        default_range: (1, 6),
        cap: 7,
        anchor: "γ(φ(m))=m for all",
    },
    CheckSpec {
        id: "hilbert-recursion",
        description: "closed form, recursion, equivariant dimensions and generating function agree; q = 1 three-term recurrence",
        criterion: 10,
        modules: &["symfunc"],
        min: 2,
        default_range: (2, 8),
        cap: 8,
        anchor: "IH_n(t,q), bihilb_n(t,q)",
    },
    CheckSpec {
        id: "branching-rule",
        description: "∂/∂p₁ of the equivariant series against the two-step branching formula",
        criterion: 11,
        modules: &["symfunc"],
        min: 2,
        default_range: (2, 7),
        cap: 8,
        anchor: "∂IH_n/∂p₁ = IH_{n−1} + tq·p₁(1 + q·p₁∂/∂p₁)IH_{n−2}",
    },
    CheckSpec {
        id: "schur-tables",
        description: "Schur expansions of the equivariant series against the tabulated rows; Schur positivity of every L_λ",
        criterion: 11,
        modules: &["symfunc"],
        min: 1,
        default_range: (2, 4),
        cap: 8,
        anchor: "the {\\it Schur functions} {s_λ}",
    },
    CheckSpec {
        id: "jordan-identities",
        description: "P^(n)_0 is the odd-partition Lie sum; P^(n)_m = p₁P^(n−1)_m for odd n; the derivative identity for even n",
        criterion: 12,
        modules: &["symfunc"],
        min: 1,
        default_range: (1, 8),
        cap: 8,
        anchor: "Interpreting P^(n)_m := 0",
    },
];

pub fn list_checks() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub id: String,
    pub n: usize,
    pub status: Status,
    pub ms: u64,
    /// Counterexample on failure, annotation on an expected mismatch, reason
    /// when skipped.
    pub witness: Option<String>,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub records: Vec<ReportRecord>,
}

impl Report {
    pub fn new(mut records: Vec<ReportRecord>) -> Self {
        records.sort_by(|a, b| (a.id.as_str(), a.n).cmp(&(b.id.as_str(), b.n)));
        Report { version: 1, records }
    }

    pub fn any_failed(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&format!("{} n={} {} {}ms", r.id, r.n, r.status, r.ms));
            if let Some(w) = &r.witness {
                out.push_str(&format!(" :: {w}"));
            }
            out.push('\n');
        }
        let failed = self.records.iter().filter(|r| r.status == Status::Fail).count();
        out.push_str(&format!("{} records, {} failed\n", self.records.len(), failed));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(CheckError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("plain data");
            s.push('\n');
            s
        }
        Format::Text => report.to_text(),
    }
}

pub fn emit_report(report: &Report, path: &Path, format: Format) -> Result<(), CheckError> {
    fs::write(path, render_report(report, format)).map_err(|e| CheckError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Record wall-clock milliseconds; when off every `ms` is 0 and reports
    /// are byte-identical across runs.
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { timings: true }
    }
}

enum Outcome {
    Pass,
    Annotated(String),
    Fail(String),
    Skipped(String),
}

fn validate(spec: &CheckSpec, lo: usize, hi: usize) -> Result<(), CheckError> {
    if lo > hi || lo < spec.min || hi > spec.cap {
        return Err(CheckError::OutOfRange {
            id: spec.id.to_string(),
            lo,
            hi,
            min: spec.min,
            cap: spec.cap,
        });
    }
    Ok(())
}

fn run_job(spec: &CheckSpec, n: usize, opts: RunOptions) -> ReportRecord {
    let start = Instant::now();
    let outcome = evaluate(spec.id, n);
    let ms = if opts.timings { start.elapsed().as_millis() as u64 } else { 0 };
    let (status, witness) = match outcome {
        Outcome::Pass => (Status::Pass, None),
        Outcome::Annotated(w) => (Status::Pass, Some(w)),
        Outcome::Fail(w) => (Status::Fail, Some(w)),
        Outcome::Skipped(w) => (Status::Skipped, Some(w)),
    };
    ReportRecord {
        id: spec.id.to_string(),
        n,
        status,
        ms,
        witness,
        anchor: spec.anchor.to_string(),
    }
}

/// Runs one check over `range` (default range when `None`).
pub fn run_check(
    id: &str,
    range: Option<(usize, usize)>,
    opts: RunOptions,
) -> Result<Vec<ReportRecord>, CheckError> {
    let spec = find_check(id).ok_or_else(|| CheckError::UnknownCheck(id.to_string()))?;
    let (lo, hi) = range.unwrap_or(spec.default_range);
    validate(spec, lo, hi)?;
    Ok((lo..=hi).into_par_iter().map(|n| run_job(spec, n, opts)).collect())
}

/// Runs every check over its default range.
pub fn run_all(opts: RunOptions) -> Report {
    let jobs: Vec<(&CheckSpec, usize)> = REGISTRY
        .iter()
        .flat_map(|s| (s.default_range.0..=s.default_range.1).map(move |n| (s, n)))
        .collect();
    Report::new(jobs.into_par_iter().map(|(s, n)| run_job(s, n, opts)).collect())
}

fn evaluate(id: &str, n: usize) -> Outcome {
    let result = match id {
        "hilbert-products" => hilbert_products(n),
        "eulerian-a-family" => eulerian_a_family(n),
        "eulerian-b-orthogonality" => eulerian_b_family(n),
        "peak-family" => peak_family(n),
        "peak-vanishing" => peak_vanishing(n),
        "peak-character" => peak_character(n),
        "fixed-basis" => fixed_basis_check(n),
        "bigraded-table" => bigraded_table(n),
        "bigraded-equivariance" => bigraded_equivariance(n),
        "flat-orbit-fixed-character" => flat_orbit_fixed_character(n),
        "pairing-golden" => pairing_golden(n),
        "pairing-inverse" => pairing_inverse(n),
        "hilbert-recursion" => hilbert_recursion(n),
        "branching-rule" => branching_rule(n),
        "schur-tables" => schur_tables(n),
        "jordan-identities" => jordan_identities(n),
        _ => unreachable!("registry and dispatch agree"),
    };
    result.unwrap_or_else(Outcome::Fail)
}

type CheckResult = Result<Outcome, String>;

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn class_reps(n: usize) -> Vec<Permutation> {
    partitions_of(n).iter().map(Permutation::with_cycle_type).collect()
}

/// Coefficients of `Π (1 + c t)`.
fn product_of_linears(cs: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut out = vec![1u64];
    for c in cs {
        let mut next = vec![0u64; out.len() + 1];
        for (i, x) in out.iter().enumerate() {
            next[i] += x;
            next[i + 1] += c * x;
        }
        out = next;
    }
    out
}

fn hilbert_products(n: usize) -> CheckResult {
    let nf = factorial(n).to_u64().expect("small n");
    for pres in Presentation::ALL {
        let spec = RingSpec::new(pres, n);
        let expected = if pres.is_type_b() {
            product_of_linears((1..=n as u64).map(|i| 2 * i - 1))
        } else {
            product_of_linears(1..n as u64)
        };
        let got = hilbert_series(&spec);
        ensure(got == expected, || format!("{pres}: series {got:?}, product {expected:?}"))?;
        let total: u64 = got.iter().sum();
        let size = if pres.is_type_b() { nf << n } else { nf };
        ensure(total == size, || format!("{pres}: {total} standard monomials, expected {size}"))?;
        if n <= 5 {
            let basis = standard_basis(&spec);
            ensure(basis.len() as u64 == size, || format!("{pres}: enumerated {} monomials", basis.len()))?;
            let reducer = Reducer::shared(spec);
            if let Some(m) = basis.iter().find(|m| !reducer.is_standard(m)) {
                return Err(format!("{pres}: {m} is divisible by a leading term"));
            }
        }
        if n <= 4 {
            if let Some((i, j, r)) = s_pair_failures(&spec).into_iter().next() {
                return Err(format!("{pres}: S-pair of relations {i}, {j} reduces to {r}"));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn describe_family(d: &FamilyDiagnosis) -> String {
    format!(
        "products failing E_i E_j = δ_ij E_i: {:?}; sums to 1: {}",
        d.product_failures, d.sums_to_identity
    )
}

fn eulerian_a_family(n: usize) -> CheckResult {
    let fam = eulerian_a(n).map_err(|e| e.to_string())?;
    let d = idempotent_family_check(&fam.elements).map_err(|e| e.to_string())?;
    ensure(d.passes(), || describe_family(&d))?;
    for (k, e) in fam.elements.iter().enumerate() {
        if let Err((g, h)) = constant_on_statistic(e, |g: &Permutation| g.descent_set()) {
            return Err(format!("E_{k}: {g} and {h} share a descent set but not a coefficient"));
        }
    }
    Ok(Outcome::Pass)
}

fn eulerian_b_family(n: usize) -> CheckResult {
    let fam = eulerian_b(n).map_err(|e| e.to_string())?;
    let d = idempotent_family_check(&fam.elements).map_err(|e| e.to_string())?;
    ensure(d.passes(), || describe_family(&d))?;
    for (k, e) in fam.elements.iter().enumerate() {
        if let Err((g, h)) = constant_on_statistic(e, |g: &SignedPermutation| g.descent_set()) {
            return Err(format!("E_{k}: {g} and {h} share a descent set but not a coefficient"));
        }
    }
    Ok(Outcome::Pass)
}

fn peak_family(n: usize) -> CheckResult {
    let fam = peak_idempotents(n).map_err(|e| e.to_string())?;
    let d = idempotent_family_check(&fam.elements).map_err(|e| e.to_string())?;
    ensure(d.passes(), || describe_family(&d))?;
    for (k, e) in fam.elements.iter().enumerate() {
        if let Err((g, h)) = constant_on_statistic(e, |g: &Permutation| g.peak_set()) {
            return Err(format!("π_{k}: {g} and {h} share a peak set but not a coefficient"));
        }
    }
    Ok(Outcome::Pass)
}

fn peak_vanishing(n: usize) -> CheckResult {
    let fam = peak_idempotents(n).map_err(|e| e.to_string())?;
    let zero = fam.zero_indices();
    let expected: Vec<usize> = (0..=n).filter(|k| (n - k) % 2 == 1).collect();
    ensure(zero == expected, || format!("π_k = 0 for k in {zero:?}, expected {expected:?}"))?;
    Ok(Outcome::Pass)
}

fn peak_character(n: usize) -> CheckResult {
    let fam = peak_idempotents(n).map_err(|e| e.to_string())?;
    let perms = Permutation::all(n);
    for (j, e) in fam.elements.iter().enumerate() {
        let chi = left_ideal_character(e).map_err(|e| e.to_string())?;
        let expected = lie_sum(n, |l| l.odd_count() == j).to_class_function(n);
        ensure(chi == expected, || format!("π_{j}: character {chi}, Lie sum gives {expected}"))?;
        let count = perms.iter().filter(|s| s.odd_cycles() == j).count();
        let dim = chi.degree();
        ensure(dim == crate::rational::int(count as i64), || {
            format!("π_{j}: dimension {dim}, {count} permutations with {j} odd cycles")
        })?;
    }
    Ok(Outcome::Pass)
}

fn fixed_basis_check(n: usize) -> CheckResult {
    let basis = fixed_basis(n);
    let nf = factorial(n).to_usize().expect("small n");
    ensure(basis.len() == nf, || format!("{} elements, expected {nf}", basis.len()))?;
    let distinct: BTreeSet<&Monomial> = basis.iter().collect();
    ensure(distinct.len() == nf, || "repeated monomials".to_string())?;
    let spec = RingSpec::new(Presentation::Bvw, n);
    let reducer = Reducer::shared(spec);
    for q in &basis {
        ensure(reducer.is_standard(q), || format!("{q} is not standard"))?;
        ensure(factor_quadratics(q, n).is_some(), || format!("{q} is not a product of the quadratics"))?;
        ensure(q.degree() % 2 == 0, || format!("{q} has odd degree"))?;
        let p = Polynomial::monomial(q.clone());
        let nf_q = reducer.reduce(&p).map_err(|e| e.to_string())?;
        for i in 1..=n {
            let tau = SignedPermutation::sign_change(n, i);
            let moved = act(&tau, &p, &spec).map_err(|e| e.to_string())?;
            let got = reducer.reduce(&moved).map_err(|e| e.to_string())?;
            ensure(got == nf_q, || format!("τ_{i} sends {q} to {got}"))?;
        }
    }
    Ok(Outcome::Pass)
}

/// Dimensions of the invariant subring keyed by (total degree, v-w degree).
fn fixed_bidegrees(n: usize) -> BigradedSeries {
    let mut out = BigradedSeries::default();
    for q in fixed_basis(n) {
        let l = q
            .factors()
            .iter()
            .filter(|(v, _)| matches!(v, Var::V(..) | Var::W(..)))
            .map(|(_, e)| *e as usize)
            .sum();
        out.add(q.degree() as usize, l, 1);
    }
    out
}

fn series(terms: &[((usize, usize), u64)]) -> BigradedSeries {
    BigradedSeries::from_map(terms.iter().copied().collect())
}

fn doubled_t(s: &BigradedSeries) -> BigradedSeries {
    BigradedSeries::from_map(s.coeffs().iter().map(|(&(a, b), &c)| ((2 * a, b), c)).collect())
}

fn bigraded_table(n: usize) -> CheckResult {
    let computed = fixed_bidegrees(n);
    let recursion = doubled_t(&bihilb_recursive(n));
    ensure(computed == recursion, || format!("computed {computed}, recursion {recursion}"))?;
    let tabulated = match n {
        2 => series(&[((0, 0), 1)]),
        3 => series(&[((0, 0), 1), ((2, 1), 3), ((2, 2), 2)]),
        4 => series(&[((0, 0), 1), ((2, 1), 6), ((2, 2), 8), ((4, 2), 3), ((4, 3), 6)]),
        _ => return Ok(Outcome::Pass),
    };
    if computed == tabulated {
        Ok(Outcome::Pass)
    } else if n == 2 {
        Ok(Outcome::Annotated(format!(
            "expected mismatch: table lists {tabulated}; invariant basis and recursion give {computed} (u1*w12 in bidegree (2,1))"
        )))
    } else {
        Err(format!("computed {computed}, table {tabulated}"))
    }
}

fn bigraded_equivariance(n: usize) -> CheckResult {
    let spec = RingSpec::new(Presentation::BvwGr, n);
    let reps = class_reps(n);
    let mut total = 0;
    for k in 0..=n {
        for l in 0..=n {
            let basis = component_basis(&spec, &Selector::FixedBidegree(k, l)).map_err(|e| e.to_string())?;
            total += basis.len();
            let expected = lie_sum(n, |lam| lam.len() == n - l && lam.odd_count() == n - k).to_class_function(n);
            if basis.is_empty() {
                ensure(expected.is_zero(), || format!("bidegree ({k},{l}) is empty but the Lie sum is {expected}"))?;
                continue;
            }
            let chi = subspace_character(&basis, &reps, &spec).map_err(|e| e.to_string())?;
            ensure(chi == expected, || format!("bidegree ({k},{l}): character {chi}, Lie sum {expected}"))?;
        }
    }
    let nf = factorial(n).to_usize().expect("small n");
    ensure(total == nf, || format!("components cover {total} monomials, expected {nf}"))?;
    Ok(Outcome::Pass)
}

fn flat_orbit_fixed_character(n: usize) -> CheckResult {
    let spec = RingSpec::new(Presentation::BvwGr, n);
    let reps = class_reps(n);
    for w in 0..=n {
        for mu in partitions_of(w) {
            let basis = component_basis(&spec, &Selector::FlatOrbit(mu.clone())).map_err(|e| e.to_string())?;
            let chi = fixed_part_character(&basis, &reps, &spec).map_err(|e| e.to_string())?;
            let expected = lie_sum(n, |lam| lam.odd_parts() == mu).to_class_function(n);
            ensure(chi == expected, || format!("μ = ({mu}): invariant character {chi}, Lie sum {expected}"))?;
        }
    }
    Ok(Outcome::Pass)
}

fn mono(s: &str) -> Monomial {
    s.parse().expect("well-formed table entry")
}

fn pairing_golden(n: usize) -> CheckResult {
    let table: &[(&str, &str)] = match n {
        3 => &[
            ("1", "1"),
            ("t12", "u1*w12"),
            ("t13", "u1*w13"),
            ("t23", "u2*w23"),
            ("t12*t13", "w12*w13"),
            ("t12*t23", "v12*w23"),
        ],
        4 => &[
            ("1", "1"),
            ("t12", "u1*w12"),
            ("t13", "u1*w13"),
            ("t14", "u1*w14"),
            ("t23", "u2*w23"),
            ("t24", "u2*w24"),
            ("t34", "u3*w34"),
            ("t12*t13", "w12*w13"),
            ("t12*t14", "w12*w14"),
            ("t23*t24", "w23*w24"),
            ("t12*t23", "v12*w23"),
            ("t23*t34", "v23*w34"),
            ("t12*t24", "v12*w24"),
            ("t12*t34", "u1*w12*u3*w34"),
            ("t13*t24", "u1*w13*u2*w24"),
            ("t23*t14", "u1*w14*u2*w23"),
            ("t12*t13*t24", "u1*w13*v12*w24"),
            ("t12*t23*t14", "u1*w14*v12*w23"),
        ],
        10 => &[(
            "t12*t24*t35*t16*t5,10*t78*t89*t7,10",
            "u1*w16*v12*w24*u3*w35*w5,10*w7,10*v78*w89",
        )],
        _ => return Ok(Outcome::Skipped(format!("no worked example for n = {n}"))),
    };
    for (m, expected) in table {
        let (m, expected) = (mono(m), mono(expected));
        match pairing_phi(&m, n) {
            Ok(got) => ensure(got == expected, || format!("φ({m}) = {got}, table gives {expected}"))?,
            Err(e) => return Err(format!("φ({m}) undefined ({e}); worked example gives {expected}")),
        }
    }
    if n == 3 {
        let covered: BTreeSet<Monomial> = table.iter().map(|(m, _)| mono(m)).collect();
        let all: BTreeSet<Monomial> = standard_basis(&RingSpec::new(Presentation::At, 3)).into_iter().collect();
        ensure(covered == all, || "table does not cover the n = 3 basis".to_string())?;
    }
    Ok(Outcome::Pass)
}

fn pairing_inverse(n: usize) -> CheckResult {
    let basis = standard_basis(&RingSpec::new(Presentation::At, n));
    let mut images = BTreeSet::new();
    for m in &basis {
        let q = pairing_phi(m, n).map_err(|e| e.to_string())?;
        let back = gamma(&Polynomial::monomial(q.clone())).map_err(|e| e.to_string())?;
        ensure(back == Polynomial::monomial(m.clone()), || format!("γ(φ({m})) = γ({q}) = {back}"))?;
        images.insert(q);
    }
    ensure(images.len() == basis.len(), || "φ is not injective".to_string())?;
    Ok(Outcome::Pass)
}

fn hilbert_recursion(n: usize) -> CheckResult {
    let mut by_perm = BigradedSeries::default();
    for s in Permutation::all(n) {
        by_perm.add((n - s.odd_cycles()) / 2, n - s.cycles(), 1);
    }
    let closed = bihilb(n);
    ensure(closed == by_perm, || format!("class sum {closed}, permutation sum {by_perm}"))?;
    let rec = bihilb_recursive(n);
    ensure(rec == closed, || format!("recursion {rec}, closed form {closed}"))?;
    let eq = bihilb_from_equivariant(n);
    ensure(eq == closed, || format!("equivariant dimensions {eq}, closed form {closed}"))?;
    ensure(sheffer_check(n).is_ok(), || format!("q = 1 recurrence fails at {:?}", sheffer_check(n)))?;
    let in_s: BTreeMap<(i64, i64), crate::rational::Q> = closed
        .coeffs()
        .iter()
        .map(|(&(a, b), &c)| ((2 * a as i64, b as i64), crate::rational::int(c as i64)))
        .collect();
    let swapped = generating_function_coefficient(n, Substitution::ODD_WEIGHTED);
    ensure(swapped == in_s, || format!("generating function gives {swapped:?}, closed form {in_s:?}"))?;
    let stated = generating_function_coefficient(n, Substitution::AS_STATED);
    if stated == in_s {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::Annotated(
            "expected mismatch: with a=q^-1, b=t^-1/2 q^-1 the generating function weights even cycles by t; exchanging a and b reproduces the closed form".to_string(),
        ))
    }
}

fn branching_rule(n: usize) -> CheckResult {
    check_branching(n).map_err(|diff| format!("lhs - rhs = {diff}"))?;
    Ok(Outcome::Pass)
}

type SchurRow = ((usize, usize), &'static [(&'static [usize], i64)]);

fn schur_tables(n: usize) -> CheckResult {
    let series_n = equivariant_series(n);
    let mut p1n = SymFunc::zero();
    for lam in partitions_of(n) {
        let l = l_lambda(&lam);
        p1n.add_assign(&l);
        let s = to_schur(&l).map_err(|e| e.to_string())?;
        ensure(s.values().all(|c| c.is_integer() && *c > num_traits::Zero::zero()), || {
            format!("L_({lam}) has Schur coefficients {s:?}")
        })?;
    }
    ensure(p1n == SymFunc::p(partition(&vec![1; n])), || format!("Σ L_λ = {p1n}"))?;
    let rows: &[SchurRow] = match n {
        2 => &[((0, 0), &[(&[2], 1)])],
        3 => &[
            ((0, 0), &[(&[3], 1)]),
            ((1, 1), &[(&[2, 1], 1), (&[1, 1, 1], 1)]),
            ((1, 2), &[(&[2, 1], 1)]),
        ],
        4 => &[
            ((0, 0), &[(&[4], 1)]),
            ((1, 1), &[(&[3, 1], 1), (&[2, 1, 1], 1)]),
            ((1, 2), &[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)]),
            ((2, 2), &[(&[2, 2], 1), (&[1, 1, 1, 1], 1)]),
            ((2, 3), &[(&[3, 1], 1), (&[2, 1, 1], 1)]),
        ],
        _ => return Ok(Outcome::Pass),
    };
    let tabulated: BTreeMap<(usize, usize), BTreeMap<Partition, crate::rational::Q>> = rows
        .iter()
        .map(|(k, terms)| {
            (*k, terms.iter().map(|(p, c)| (partition(p), crate::rational::int(*c))).collect())
        })
        .collect();
    let computed = series_n.to_schur().map_err(|e| e.to_string())?;
    let show = |m: &BTreeMap<(usize, usize), BTreeMap<Partition, crate::rational::Q>>| {
        m.iter()
            .map(|((a, b), s)| {
                let terms: Vec<String> = s.iter().map(|(p, c)| format!("{c}s({p})")).collect();
                format!("t^{a}q^{b}[{}]", terms.join(" + "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    if computed == tabulated {
        return Ok(Outcome::Pass);
    }
    if n == 2 {
        let mut with_missing = tabulated.clone();
        with_missing.insert((1, 1), BTreeMap::from([(partition(&[1, 1]), crate::rational::Q::one())]));
        ensure(computed == with_missing, || format!("computed {}, table {}", show(&computed), show(&tabulated)))?;
        return Ok(Outcome::Annotated(format!(
            "expected mismatch: table lists {}; the series has the extra term tq L_(2) = tq s(1,1)",
            show(&tabulated)
        )));
    }
    Err(format!("computed {}, table {}", show(&computed), show(&tabulated)))
}

fn jordan_identities(n: usize) -> CheckResult {
    let odd_sum = lie_sum(n, Partition::all_odd);
    let p0 = jordan_p(n, 0);
    ensure(p0 == odd_sum, || format!("P_0 = {p0}, odd-partition sum {odd_sum}"))?;
    let p1 = SymFunc::p_k(1);
    ensure(jordan_p(n, -1).is_zero(), || "P_{-1} is nonzero".to_string())?;
    let mut total = SymFunc::zero();
    for m in 0..=(n / 2) as i64 {
        let pm = jordan_p(n, m);
        total.add_assign(&pm);
        if n % 2 == 1 {
            let rhs = p1.multiply(&jordan_p(n - 1, m));
            ensure(pm == rhs, || format!("m = {m}: P^(n)_m = {pm}, p1 P^(n-1)_m = {rhs}"))?;
        } else {
            let lhs = pm.restrict();
            let rhs = p1.multiply(&jordan_p(n - 1, m).restrict().add(&jordan_p(n - 2, m - 1)));
            ensure(lhs == rhs, || format!("m = {m}: ∂P^(n)_m = {lhs}, rhs {rhs}"))?;
        }
    }
    let all = lie_sum(n, |_| true);
    ensure(total == all, || "the P^(n)_m do not sum to Σ L_λ".to_string())?;
    Ok(Outcome::Pass)
}
