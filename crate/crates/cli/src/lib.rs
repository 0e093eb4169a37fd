//! Argument parsing and dispatch for the `hfl` binary.
//!
//! Exit codes: 0 success, 1 nothing found, 2 usage or input error,
//! 3 cap or budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hfl_core::constructions::{
    counterexample_29_36, hs_sharpness_construction, prop2_construction, random_construction,
    ConstructionDescriptor, Distribution, DEFAULT_ATTEMPT_CAP,
};
use hfl_core::lab::{
    adversarial_search, evaluate_lower_bounds, scan_report, verify_theorem3_empirically,
    AnnealConfig, BoundRecord, ScanConfig, Theorem3Config,
};
use hfl_core::schemes::{
    local_search_heavy_collection, scheme2_factor, LocalSearchConfig, Scheme2Config,
};
use hfl_core::solver::{solve, SolveMethod, SolverCaps};
use hfl_core::{Error, FactorParams, Rational, Strictness, WeightedCompleteGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONE_FOUND: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hfl",
    version,
    about = "Heavy clique factors in edge-weighted complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a weighting and write it as graph JSON.
    Generate(GenerateArgs),
    /// Decide exactly whether a heavy K_r-factor exists.
    Solve(SolveArgs),
    /// Build a heavy factor by random partitions and bipartite matchings.
    Scheme2(Scheme2Args),
    /// Hill-climb a large collection of disjoint heavy cliques.
    Localsearch(LocalSearchArgs),
    /// Certified lower bound on delta(r, t, n), optionally improved by annealing.
    Estimate(EstimateArgs),
    /// Tabulate lower bounds against the conjectured and proven asymptotes as CSV.
    Scan(ScanArgs),
    /// Re-check a stored bound record or sample the upper bound.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
struct Caps {
    /// Largest n handed to an exact solver.
    #[arg(long, env = "HFL_SOLVER_CAP", default_value_t = 24)]
    solver_cap: usize,
}

impl Caps {
    fn solver_caps(&self) -> SolverCaps {
        let d = SolverCaps::default();
        SolverCaps {
            factor_enumeration: d.factor_enumeration.min(self.solver_cap),
            collection_enumeration: d.collection_enumeration.min(self.solver_cap),
            certification: self.solver_cap,
        }
    }

    fn check(&self, n: usize) -> Result<(), Error> {
        if n > self.solver_cap {
            return Err(Error::CapExceeded {
                what: "exact solve",
                value: n,
                cap: self.solver_cap,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Prop2,
    HsSharpness,
    #[value(name = "counterexample-29-36")]
    Counterexample,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DistKind {
    UniformGrid,
    MinDegree,
    Sparse,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: Option<usize>,
    /// Threshold as num/den.
    #[arg(long)]
    t: Option<Rational>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Weight distribution for --kind random.
    #[arg(long, value_enum, default_value = "uniform-grid")]
    distribution: DistKind,
    /// Grid denominator D; random weights lie in {0, 1/D, ..., 1}.
    #[arg(long, default_value_t = 12)]
    denominator: u32,
    /// Normalized minimum degree for --distribution min-degree.
    #[arg(long)]
    delta: Option<Rational>,
    /// Probability of a nonzero pair for --distribution sparse.
    #[arg(long)]
    density: Option<Rational>,
    /// Multiply every weight by this factor in [0, 1].
    #[arg(long)]
    scale: Option<Rational>,
    /// Rejection-sampling budget for --distribution min-degree.
    #[arg(long, env = "HFL_RETRY_BUDGET", default_value_t = DEFAULT_ATTEMPT_CAP)]
    retries: usize,
    /// Graph JSON destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Descriptor JSON destination; defaults to <out>.descriptor.json when --out is set.
    #[arg(long)]
    descriptor: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Backtrack,
    Hypergraph,
    Oracle,
}

#[derive(Debug, Args)]
struct ProblemArgs {
    /// Graph JSON file.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: Rational,
}

impl ProblemArgs {
    fn load(&self) -> Result<(WeightedCompleteGraph, FactorParams), Error> {
        let g = load_graph(&self.graph)?;
        Ok((g, FactorParams::new(self.r, self.t.clone())?))
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// Require block weight strictly above t C(r, 2).
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "backtrack")]
    method: Method,
    /// Multiply every weight by this factor before solving.
    #[arg(long)]
    scale: Option<Rational>,
    #[command(flatten)]
    caps: Caps,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Scheme2Args {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "1/10")]
    epsilon: Rational,
    /// Random partitions tried per recursion level.
    #[arg(long, env = "HFL_RETRY_BUDGET", default_value_t = 20)]
    retries: usize,
    /// Resamples allowed per partition attempt.
    #[arg(long, default_value_t = 1000)]
    partition_cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LocalSearchArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seeded restarts after the first run.
    #[arg(long, env = "HFL_RETRY_BUDGET", default_value_t = 8)]
    retries: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AnnealArgs {
    /// Annealing moves; 0 skips the adversarial search.
    #[arg(long, env = "HFL_RETRY_BUDGET", default_value_t = 0)]
    budget: usize,
    #[arg(long, default_value_t = 12)]
    denominator: u32,
}

impl AnnealArgs {
    fn config(&self) -> AnnealConfig {
        AnnealConfig {
            denominator: self.denominator,
            budget: self.budget,
            ..AnnealConfig::default()
        }
    }
}

#[derive(Debug, Args)]
struct EstimateArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: Rational,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    anneal: AnnealArgs,
    #[command(flatten)]
    caps: Caps,
    /// Where to store the weighting; the record references it.
    #[arg(long)]
    weighting_out: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Comma-separated clique sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    r: Vec<usize>,
    /// Comma-separated thresholds, each num/den.
    #[arg(long, value_delimiter = ',')]
    t: Vec<Rational>,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    anneal: AnnealArgs,
    #[command(flatten)]
    caps: Caps,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(subcommand)]
    mode: VerifyMode,
}

#[derive(Debug, Subcommand)]
enum VerifyMode {
    /// Recompute a bound record from its weighting file.
    Record {
        /// Bound record JSON written by `estimate`.
        path: PathBuf,
        /// Weighting to check; defaults to the file named in the record.
        #[arg(long)]
        weighting: Option<PathBuf>,
    },
    /// Sample weightings above 1/2 + t/2 and look for heavy factors.
    Theorem3 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        t: Rational,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1/10")]
        margin: Rational,
        #[arg(long, default_value_t = 12)]
        denominator: u32,
        /// Violations at n >= floor make the run fail.
        #[arg(long)]
        n_floor: Option<usize>,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::BudgetExhausted { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Error> {
    match command {
        Command::Generate(a) => generate(a, stdout),
        Command::Solve(a) => solve_cmd(a, stdout),
        Command::Scheme2(a) => scheme2(a, stdout),
        Command::Localsearch(a) => localsearch(a, stdout),
        Command::Estimate(a) => estimate(a, stdout),
        Command::Scan(a) => scan(a, stdout, stderr),
        Command::Verify(a) => verify(a, stdout, stderr),
    }
}

fn load_graph(path: &Path) -> Result<WeightedCompleteGraph, Error> {
    let text = fs::read_to_string(path)?;
    WeightedCompleteGraph::from_json(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Error> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes `text` to `path`, or to stdout when no path is given.
fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn require<T: Clone>(value: &Option<T>, flag: &str, kind: &str) -> Result<T, Error> {
    value
        .clone()
        .ok_or_else(|| Error::InvalidParams(format!("--{flag} is required for {kind}")))
}

fn generate(a: GenerateArgs, stdout: &mut dyn Write) -> Result<i32, Error> {
    let (g, mut descriptor): (WeightedCompleteGraph, ConstructionDescriptor) = match a.kind {
        Kind::Prop2 => prop2_construction(
            require(&a.r, "r", "prop2")?,
            &require(&a.t, "t", "prop2")?,
            a.n,
        )?,
        Kind::HsSharpness => hs_sharpness_construction(require(&a.r, "r", "hs-sharpness")?, a.n)?,
        Kind::Counterexample => counterexample_29_36(a.n)?,
        Kind::Random => {
            let dist = match a.distribution {
                DistKind::UniformGrid => Distribution::UniformGrid {
                    denominator: a.denominator,
                },
                DistKind::MinDegree => Distribution::MinDegreeConditioned {
                    delta: require(&a.delta, "delta", "min-degree")?,
                    denominator: a.denominator,
                },
                DistKind::Sparse => Distribution::SparseGrid {
                    denominator: a.denominator,
                    density: require(&a.density, "density", "sparse")?,
                },
            };
            random_construction(a.n, &dist, a.seed, a.retries)?
        }
    };
    let g = match &a.scale {
        Some(f) => {
            descriptor.scale = Some(f.clone());
            g.scale_weights(f)?
        }
        None => g,
    };
    emit(&g.to_json(), a.out.as_deref(), stdout)?;
    let descriptor_path = a.descriptor.or_else(|| {
        a.out.as_ref().map(|p| {
            let mut s = p.as_os_str().to_owned();
            s.push(".descriptor.json");
            PathBuf::from(s)
        })
    });
    if let Some(p) = descriptor_path {
        fs::write(p, to_json(&descriptor)?)?;
    }
    Ok(EXIT_OK)
}

fn solve_cmd(a: SolveArgs, stdout: &mut dyn Write) -> Result<i32, Error> {
    let (g, params) = a.problem.load()?;
    let g = match &a.scale {
        Some(f) => g.scale_weights(f)?,
        None => g,
    };
    a.caps.check(g.n())?;
    let strictness = if a.strict {
        Strictness::Strict
    } else {
        Strictness::AtLeast
    };
    let method = match a.method {
        Method::Backtrack => SolveMethod::Backtrack,
        Method::Hypergraph => SolveMethod::Hypergraph,
        Method::Oracle => SolveMethod::Oracle,
    };
    let cert = solve(&g, &params, strictness, method, &a.caps.solver_caps())?;
    emit(&to_json(&cert)?, a.out.as_deref(), stdout)?;
    Ok(if cert.is_exhausted() {
        EXIT_NONE_FOUND
    } else {
        EXIT_OK
    })
}

#[derive(Serialize)]
struct BlocksOutput<'a, S: Serialize> {
    r: usize,
    t: &'a Rational,
    blocks: Vec<Vec<usize>>,
    block_weights: Vec<Rational>,
    #[serde(flatten)]
    extra: S,
}

fn weights_of(g: &WeightedCompleteGraph, blocks: &[Vec<usize>]) -> Result<Vec<Rational>, Error> {
    blocks.iter().map(|b| g.clique_weight(b)).collect()
}

fn scheme2(a: Scheme2Args, stdout: &mut dyn Write) -> Result<i32, Error> {
    let (g, params) = a.problem.load()?;
    let config = Scheme2Config {
        retries: a.retries,
        partition_cap: a.partition_cap,
        ..Scheme2Config::default()
    };
    let outcome = scheme2_factor(&g, &params, a.seed, &a.epsilon, &config)?;
    let blocks = outcome
        .factor
        .as_ref()
        .map(|f| f.blocks().to_vec())
        .unwrap_or_default();
    #[derive(Serialize)]
    struct Extra {
        found: bool,
        stats: hfl_core::schemes::Scheme2Stats,
    }
    let out = BlocksOutput {
        r: params.r(),
        t: params.t(),
        block_weights: weights_of(&g, &blocks)?,
        blocks,
        extra: Extra {
            found: outcome.factor.is_some(),
            stats: outcome.stats,
        },
    };
    emit(&to_json(&out)?, a.out.as_deref(), stdout)?;
    Ok(if out.extra.found {
        EXIT_OK
    } else {
        EXIT_BUDGET
    })
}

fn localsearch(a: LocalSearchArgs, stdout: &mut dyn Write) -> Result<i32, Error> {
    let (g, params) = a.problem.load()?;
    let config = LocalSearchConfig {
        restarts: a.retries,
    };
    let found = local_search_heavy_collection(&g, &params, a.seed, &config)?;
    #[derive(Serialize)]
    struct Extra {
        size: usize,
        overweight_count: usize,
        uncovered: Vec<usize>,
    }
    let blocks = found.blocks.clone();
    let out = BlocksOutput {
        r: params.r(),
        t: params.t(),
        block_weights: weights_of(&g, &blocks)?,
        blocks,
        extra: Extra {
            size: found.size(),
            overweight_count: found.overweight_count,
            uncovered: found.uncovered(g.n()),
        },
    };
    emit(&to_json(&out)?, a.out.as_deref(), stdout)?;
    Ok(if found.size() == 0 {
        EXIT_NONE_FOUND
    } else {
        EXIT_OK
    })
}

fn estimate(a: EstimateArgs, stdout: &mut dyn Write) -> Result<i32, Error> {
    let caps = a.caps.solver_caps();
    let mut bound = if a.anneal.budget == 0 {
        evaluate_lower_bounds(a.r, &a.t, a.n, &caps)?
    } else {
        adversarial_search(a.r, &a.t, a.n, a.seed, &a.anneal.config(), &caps)?
    };
    if let Some(p) = &a.weighting_out {
        fs::write(p, bound.weighting.to_json())?;
        bound.record.weighting_file = Some(p.display().to_string());
    }
    emit(&to_json(&bound.record)?, a.out.as_deref(), stdout)?;
    Ok(if bound.record.certified {
        EXIT_OK
    } else if bound.record.certificate.is_none() && !bound.record.degenerate {
        EXIT_BUDGET
    } else {
        EXIT_NONE_FOUND
    })
}

fn scan(a: ScanArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Error> {
    let config = ScanConfig {
        adversarial: (a.anneal.budget > 0).then(|| a.anneal.config()),
    };
    let report = scan_report(&a.r, &a.t, a.n, a.seed, &config, &a.caps.solver_caps())?;
    for note in &report.observations {
        writeln!(stderr, "note: {note}")?;
    }
    emit(&report.to_csv()?, a.out.as_deref(), stdout)?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Error> {
    match a.mode {
        VerifyMode::Record { path, weighting } => {
            let text = fs::read_to_string(&path)?;
            let record: BoundRecord = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let weighting_path = match weighting {
                Some(p) => p,
                None => {
                    let named = require(
                        &record.weighting_file,
                        "weighting",
                        "a record without weighting_file",
                    )?;
                    let named = PathBuf::from(named);
                    if named.is_relative() && !named.exists() {
                        path.parent().unwrap_or(Path::new(".")).join(named)
                    } else {
                        named
                    }
                }
            };
            let g = load_graph(&weighting_path)?;
            let ok = record.reverify(&g)?;
            writeln!(stdout, "{}", if ok { "verified" } else { "mismatch" })?;
            Ok(if ok { EXIT_OK } else { EXIT_NONE_FOUND })
        }
        VerifyMode::Theorem3 {
            r,
            t,
            n,
            trials,
            seed,
            margin,
            denominator,
            n_floor,
            caps,
            out,
        } => {
            let config = Theorem3Config {
                margin,
                denominator,
                n_floor: n_floor.unwrap_or(usize::MAX),
                ..Theorem3Config::default()
            };
            let report =
                verify_theorem3_empirically(r, &t, trials, n, seed, &config, &caps.solver_caps())?;
            for v in &report.violations {
                writeln!(
                    stderr,
                    "note: trial {} (seed {}) has min degree {} and no heavy factor",
                    v.trial, v.seed, v.min_weighted_degree
                )?;
            }
            emit(&to_json(&report)?, out.as_deref(), stdout)?;
            Ok(if report.enforced && !report.violations.is_empty() {
                EXIT_NONE_FOUND
            } else {
                EXIT_OK
            })
        }
    }
}
