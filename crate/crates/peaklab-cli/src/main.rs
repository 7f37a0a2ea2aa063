use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use peaklab::checks::{self, Format, Report, RunOptions};
use peaklab::combinatorics::{partitions_of, Partition, Permutation};
use peaklab::group_algebra::{ElementJson, GroupAlgebraElement, GroupElement};
use peaklab::idempotents::{descent_set_a, descent_set_b, eulerian_a, eulerian_b, peak_idempotents, peak_set};
use peaklab::symfunc::{equivariant_series, equivariant_series_bigraded};
use peaklab::vg::{
    component_basis, fixed_part_character, hilbert_series, hilbert_series_bigraded, pairing_phi,
    standard_basis, subspace_character, Monomial, Presentation, RingSpec, Selector,
};

#[derive(Parser)]
#[command(name = "peaklab", version, about = "Exact checks on peak idempotents and Varchenko-Gelfand rings")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, env = "PEAKLAB_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered checks and write a report.
    Verify(VerifyArgs),
    /// Print the check registry with default ranges and caps.
    ListChecks {
        #[arg(long)]
        json: bool,
    },
    /// Standard monomial basis of a presentation.
    Basis {
        #[arg(long)]
        spec: Presentation,
        #[arg(long)]
        n: usize,
    },
    /// Hilbert series of a presentation.
    Hilb {
        #[arg(long)]
        spec: Presentation,
        #[arg(long)]
        n: usize,
        /// Bigraded by (degree, v/w-degree).
        #[arg(long)]
        bigraded: bool,
    },
    /// Dump an idempotent family as group-algebra JSON.
    Idem {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Group coefficients by descent set (peak set for `peak`).
        #[arg(long)]
        by_statistic: bool,
    },
    /// S_n-characters of ring components, or the equivariant series.
    Char(CharArgs),
    /// The bijection from standard type A monomials to the fixed basis.
    Pairing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        monomial: Monomial,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "check", required_unless_present = "check")]
    all: bool,
    #[arg(long)]
    check: Option<String>,
    #[arg(long, requires = "check")]
    n_min: Option<usize>,
    #[arg(long, requires = "check")]
    n_max: Option<usize>,
    /// Report path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "json")]
    format: String,
    /// Write ms = 0 so reports are byte-identical across runs.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    A,
    B,
    Peak,
}

#[derive(Args)]
struct CharArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "b-vw-gr")]
    spec: Presentation,
    /// Standard monomials over this flat orbit, e.g. `2,1`.
    #[arg(long, group = "which")]
    flat_orbit: Option<Partition>,
    /// Sign-invariant part of the span over this flat orbit.
    #[arg(long, group = "which")]
    fixed_flat_orbit: Option<Partition>,
    /// Fixed-basis bidegree `k,l`.
    #[arg(long, group = "which")]
    bidegree: Option<String>,
    /// The equivariant series itself.
    #[arg(long, group = "which")]
    series: bool,
    /// With `--series`: key by total degree instead of half of it.
    #[arg(long, requires = "series")]
    bigraded: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global() {
            eprintln!("peaklab: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("peaklab: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Verify(args) => verify(args),
        Command::ListChecks { json } => {
            if json {
                println!("{}", serde_json::to_string_pretty(checks::list_checks())?);
            } else {
                for c in checks::list_checks() {
                    let (lo, hi) = c.default_range;
                    println!(
                        "{:<28} criterion {:>2}  default n={lo}..={hi}  cap {}  {}",
                        c.id, c.criterion, c.cap, c.description
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis { spec, n } => {
            for m in standard_basis(&RingSpec::new(spec, n)) {
                println!("{m}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilb { spec, n, bigraded } => {
            let spec = RingSpec::new(spec, n);
            if bigraded {
                println!("{}", hilbert_series_bigraded(&spec));
            } else {
                let coeffs: Vec<String> = hilbert_series(&spec).iter().map(u64::to_string).collect();
                println!("{}", coeffs.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Idem { family, n, by_statistic } => {
            let out = match family {
                Family::A => dump(&eulerian_a(n)?.elements, by_statistic, |g| set_key(&descent_set_a(g)))?,
                Family::B => dump(&eulerian_b(n)?.elements, by_statistic, |g| set_key(&descent_set_b(g)))?,
                Family::Peak => dump(&peak_idempotents(n)?.elements, by_statistic, |g| set_key(&peak_set(g)))?,
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Char(args) => character(args),
        Command::Pairing { n, monomial } => {
            println!("{}", pairing_phi(&monomial, n)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let format: Format = args.format.parse()?;
    let opts = RunOptions { timings: !args.no_timings };
    let report = match &args.check {
        Some(id) => {
            let spec = checks::find_check(id).ok_or_else(|| anyhow!("unknown check {id:?}"))?;
            let range = match (args.n_min, args.n_max) {
                (None, None) => None,
                (lo, hi) => Some((lo.unwrap_or(spec.default_range.0), hi.unwrap_or(spec.default_range.1))),
            };
            Report::new(checks::run_check(id, range, opts)?)
        }
        None => checks::run_all(opts),
    };
    match &args.out {
        Some(path) => checks::emit_report(&report, path, format)?,
        None => print!("{}", checks::render_report(&report, format)),
    }
    Ok(if report.any_failed() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn set_key(s: &std::collections::BTreeSet<usize>) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Either the plain JSON of each element, or per element a map from the
/// statistic to the common coefficient.
fn dump<G: GroupElement>(
    elements: &[GroupAlgebraElement<G>],
    by_statistic: bool,
    stat: impl Fn(&G) -> String,
) -> Result<serde_json::Value> {
    if !by_statistic {
        let all: Vec<ElementJson> = elements.iter().map(GroupAlgebraElement::to_json).collect();
        return Ok(serde_json::to_value(all)?);
    }
    let mut out = Vec::new();
    for e in elements {
        let mut groups: BTreeMap<String, String> = BTreeMap::new();
        for r in 0..G::order(e.n()) {
            let g = G::unrank(e.n(), r);
            let c = e.coefficient(&g).to_string();
            let key = stat(&g);
            match groups.get(&key) {
                Some(prev) if *prev != c => bail!("coefficient not constant on {key} ({g})"),
                Some(_) => {}
                None => {
                    groups.insert(key, c);
                }
            }
        }
        out.push(groups);
    }
    Ok(serde_json::to_value(out)?)
}

fn character(args: CharArgs) -> Result<ExitCode> {
    let n = args.n;
    if args.series {
        let s = if args.bigraded { equivariant_series_bigraded(n) } else { equivariant_series(n) };
        println!("{}", serde_json::to_string_pretty(&s.to_json())?);
        return Ok(ExitCode::SUCCESS);
    }
    let spec = RingSpec::new(args.spec, n);
    let reps: Vec<Permutation> = partitions_of(n).iter().map(Permutation::with_cycle_type).collect();
    let chi = if let Some(mu) = args.flat_orbit {
        let basis = component_basis(&spec, &Selector::FlatOrbit(mu))?;
        subspace_character(&basis, &reps, &spec)?
    } else if let Some(mu) = args.fixed_flat_orbit {
        let basis = component_basis(&spec, &Selector::FlatOrbit(mu))?;
        fixed_part_character(&basis, &reps, &spec)?
    } else if let Some(kl) = args.bidegree {
        let (k, l) = kl
            .split_once(',')
            .and_then(|(k, l)| Some((k.trim().parse().ok()?, l.trim().parse().ok()?)))
            .with_context(|| format!("bidegree {kl:?} is not `k,l`"))?;
        let basis = component_basis(&spec, &Selector::FixedBidegree(k, l))?;
        subspace_character(&basis, &reps, &spec)?
    } else {
        bail!("pass one of --flat-orbit, --fixed-flat-orbit, --bidegree, --series");
    };
    for (lambda, v) in chi.values() {
        println!("({lambda}) {v}");
    }
    Ok(ExitCode::SUCCESS)
}
