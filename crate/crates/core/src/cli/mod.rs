//! The `incprob` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 I/O or parse error,
//! 3 invalid drawing probabilities or arguments.

pub mod io;

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::designs::{
    empirical_inclusion, rejective_profiles, replication_seed, sample_rejective, sample_successive,
    successive_profiles, Design, DrawingProbabilities, RejectiveMethod, SampleSize, Scheme,
};
use crate::error::{Error, Result};
use crate::orderings::{entropy, kl_divergence};
use crate::par::Execution;
use crate::verify::{randomized_suite, Suite, SuiteConfig, Verifier, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "incprob",
    version,
    about = "Inclusion probabilities for rejective and successive sampling"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact inclusion probabilities.
    Compute(ComputeArgs),
    /// Draw samples, or estimate inclusion frequencies over many replications.
    Sample(SampleArgs),
    /// Check the ordering results on the given drawing probabilities.
    Verify(VerifyArgs),
    /// Side-by-side profiles, entropies and divergences across sample sizes.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct InputArgs {
    /// Comma-separated drawing probabilities.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// CSV (one probability per line, optional header) or JSON array.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to a file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DesignArg {
    Rejective,
    Successive,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Restart,
    SequentialDp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Majorization,
    Entropy,
    Divergence,
    Bounds,
    Ratios,
    Lr,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "rejective")]
    pub design: DesignArg,
    /// Sample size: `2`, a range `1..4`, or `all`.
    #[arg(long, default_value = "all")]
    pub n: String,
    #[arg(long, default_value_t = crate::designs::DEFAULT_EXACT_CUTOFF)]
    pub exact_cutoff: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "rejective")]
    pub design: DesignArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub reps: u64,
    #[arg(long, env = "INCPROB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Rejective sampler.
    #[arg(long, value_enum, default_value = "sequential-dp")]
    pub method: MethodArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "all", value_delimiter = ',')]
    pub suite: Vec<SuiteArg>,
    /// Restrict size-specific suites (bounds, ratios, lr) to one sample size.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[arg(long, default_value_t = crate::designs::DEFAULT_EXACT_CUTOFF)]
    pub exact_cutoff: usize,
    /// Monte Carlo replications per sample size above the exact cutoff.
    #[arg(long, default_value_t = 100_000)]
    pub reps: u64,
    #[arg(long, env = "INCPROB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Verify on this many random populations per size instead of an input.
    #[arg(long, value_name = "TRIALS")]
    pub random: Option<usize>,
    /// Population sizes for `--random`, e.g. `2..10`.
    #[arg(long, default_value = "2..10")]
    pub sizes: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value = "all")]
    pub n: String,
    #[arg(long, default_value_t = crate::designs::DEFAULT_EXACT_CUTOFF)]
    pub exact_cutoff: usize,
    /// Monte Carlo replications for successive profiles above the cutoff.
    #[arg(long, default_value_t = 100_000)]
    pub reps: u64,
    #[arg(long, env = "INCPROB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Maps an error to its process exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) => EXIT_IO,
        Error::Argument(_) | Error::Domain(_) | Error::Capability { .. } => EXIT_DOMAIN,
        Error::Numerical(_) | Error::RestartExhausted(_) => EXIT_VERIFY_FAILED,
    }
}

/// Runs a parsed command and returns the exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Sample(a) => cmd_sample(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Compare(a) => cmd_compare(a),
    }
}

fn load_alpha(input: &InputArgs) -> Result<DrawingProbabilities> {
    let raw = match (&input.alpha, &input.input) {
        (Some(s), _) => io::parse_alpha_list(s)?,
        (None, Some(p)) => io::read_alpha_file(p)?,
        (None, None) => return Err(Error::Parse("one of --alpha or --input is required".into())),
    };
    DrawingProbabilities::new(raw)
}

/// Parses `3`, `1..4` (inclusive), `1-4` or `all` against a population size.
pub fn parse_sizes(spec: &str, units: usize) -> Result<Vec<usize>> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("all") {
        return Ok((1..=units).collect());
    }
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("sample size {s:?}: {e}")))
    };
    let (lo, hi) = match spec.split_once("..").or_else(|| spec.split_once('-')) {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(spec)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi || hi > units {
        return Err(Error::Argument(format!(
            "sample sizes {spec} outside 1..={units}"
        )));
    }
    Ok((lo..=hi).collect())
}

fn open_output(out: &OutputArgs) -> Result<Box<dyn Write>> {
    Ok(match &out.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

fn cmd_compute(a: ComputeArgs) -> Result<i32> {
    let alpha = load_alpha(&a.input)?;
    let sizes = parse_sizes(&a.n, alpha.len())?;
    let mut profiles = Vec::new();
    if matches!(a.design, DesignArg::Rejective | DesignArg::Both) {
        let all = rejective_profiles(&alpha, Execution::default());
        profiles.extend(sizes.iter().map(|&n| all[n - 1].clone()));
    }
    if matches!(a.design, DesignArg::Successive | DesignArg::Both) {
        let all = successive_profiles(&alpha, a.exact_cutoff)?;
        profiles.extend(sizes.iter().map(|&n| all[n - 1].clone()));
    }
    let mut out = open_output(&a.output)?;
    match a.output.format.unwrap_or(Format::Csv) {
        Format::Csv => io::write_profiles_csv(&mut out, alpha.as_slice(), &profiles)?,
        Format::Json => io::write_profiles_json(&mut out, alpha.as_slice(), &profiles)?,
        Format::Table => {
            let mut t = String::new();
            let _ = writeln!(
                t,
                "{:<10}  {:>3}  {:>5}  {:>10}  {:>10}  {:>10}",
                "design", "n", "unit", "alpha", "pi", "per_draw"
            );
            for p in &profiles {
                for (i, x) in alpha.as_slice().iter().enumerate() {
                    let _ = writeln!(
                        t,
                        "{:<10}  {:>3}  {:>5}  {:>10.6}  {:>10.6}  {:>10.6}",
                        p.design.to_string(),
                        p.n,
                        i + 1,
                        x,
                        p.pi[i],
                        p.per_draw[i]
                    );
                }
            }
            out.write_all(t.as_bytes())?;
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DrawJson {
    design: Design,
    n: usize,
    seed: u64,
    units: Vec<usize>,
    retained_order: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct EstimateJson<'a> {
    alpha: &'a [f64],
    estimate: &'a crate::designs::McEstimate,
}

fn cmd_sample(a: SampleArgs) -> Result<i32> {
    let alpha = load_alpha(&a.input)?;
    let n = SampleSize::new(a.n, &alpha)?;
    let method = match a.method {
        MethodArg::Restart => RejectiveMethod::Restart,
        MethodArg::SequentialDp => RejectiveMethod::SequentialDp,
    };
    let (design, scheme) = match a.design {
        DesignArg::Rejective => (Design::Rejective, Scheme::Rejective(method)),
        DesignArg::Successive => (Design::Successive, Scheme::Successive),
        DesignArg::Both => {
            return Err(Error::Argument("sampling needs a single design".into()));
        }
    };
    let mut out = open_output(&a.output)?;
    let format = a.output.format.unwrap_or(Format::Csv);
    if a.reps == 1 {
        let draw = match scheme {
            Scheme::Rejective(m) => sample_rejective(&alpha, n, a.seed, m)?,
            Scheme::Successive => sample_successive(&alpha, n, a.seed),
        };
        let one_based = |v: &[usize]| v.iter().map(|u| u + 1).collect::<Vec<_>>();
        let listed = draw.retained_order.as_deref().unwrap_or(&draw.units);
        match format {
            Format::Json => io::write_json(
                &mut out,
                &DrawJson {
                    design,
                    n: n.get(),
                    seed: a.seed,
                    units: one_based(&draw.units),
                    retained_order: draw.retained_order.as_deref().map(one_based),
                },
            )?,
            Format::Csv | Format::Table => {
                // successive draws are listed in retention order
                writeln!(out, "position,unit")?;
                for (k, u) in listed.iter().enumerate() {
                    writeln!(out, "{},{}", k + 1, u + 1)?;
                }
            }
        }
    } else {
        let est = empirical_inclusion(scheme, &alpha, n, a.reps, a.seed)?;
        match format {
            Format::Json => io::write_json(
                &mut out,
                &EstimateJson {
                    alpha: alpha.as_slice(),
                    estimate: &est,
                },
            )?,
            Format::Csv | Format::Table => {
                writeln!(out, "unit,alpha,pi_hat,se")?;
                for (i, x) in alpha.as_slice().iter().enumerate() {
                    writeln!(
                        out,
                        "{},{},{},{}",
                        i + 1,
                        io::fmt_num(*x),
                        io::fmt_num(est.pi_hat[i]),
                        io::fmt_num(est.se[i])
                    )?;
                }
            }
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn suites_from(args: &[SuiteArg]) -> Vec<Suite> {
    let mut out = Vec::new();
    for s in args {
        let add: &[Suite] = match s {
            SuiteArg::All => &Suite::ALL,
            SuiteArg::Majorization => &[Suite::Majorization],
            SuiteArg::Entropy => &[Suite::Entropy],
            SuiteArg::Divergence => &[Suite::Divergence],
            SuiteArg::Bounds => &[Suite::Bounds],
            SuiteArg::Ratios => &[Suite::Ratios],
            SuiteArg::Lr => &[Suite::Lr],
        };
        for x in add {
            if !out.contains(x) {
                out.push(*x);
            }
        }
    }
    out
}

fn cmd_verify(a: VerifyArgs) -> Result<i32> {
    let suites = suites_from(&a.suite);
    let cfg = VerifyConfig {
        tolerance: a.tolerance,
        exact_cutoff: a.exact_cutoff,
        mc_reps: a.reps,
        seed: a.seed,
        ..Default::default()
    };
    let format = a.output.format.unwrap_or(Format::Table);
    if let Some(trials) = a.random {
        let sizes = parse_sizes(&a.sizes, usize::MAX)?;
        let (lo, hi) = (sizes[0].max(2), *sizes.last().expect("non-empty"));
        let report = randomized_suite(&SuiteConfig {
            sizes: lo..=hi,
            trials,
            seed: a.seed,
            suites,
            verify: cfg,
            ..Default::default()
        })?;
        let mut out = open_output(&a.output)?;
        match format {
            Format::Json => io::write_json(&mut out, &report)?,
            Format::Csv => {
                writeln!(out, "family,checks,failures,min_slack")?;
                for (k, f) in &report.families {
                    writeln!(
                        out,
                        "{k},{},{},{}",
                        f.checks,
                        f.failures,
                        io::fmt_num(f.min_slack)
                    )?;
                }
            }
            Format::Table => out.write_all(report.to_table().as_bytes())?,
        }
        out.flush()?;
        return Ok(if report.overall {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        });
    }

    let alpha = load_alpha(&a.input)?;
    let verifier = Verifier::new(&alpha, &cfg)?;
    let report = match a.n {
        Some(n) => verifier.run_at(&suites, SampleSize::new(n, &alpha)?)?,
        None => verifier.run(&suites),
    };
    let mut out = open_output(&a.output)?;
    match format {
        Format::Json => io::write_json(&mut out, &report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["check", "anchor", "kind", "holds", "slack", "tolerance"])
                .map_err(io::csv_err)?;
            for c in &report.checks {
                let kind = serde_json::to_value(c.kind).expect("enum");
                w.write_record([
                    c.name.as_str(),
                    c.anchor,
                    kind.as_str().unwrap_or_default(),
                    if c.holds { "true" } else { "false" },
                    &io::fmt_num(c.slack),
                    &io::fmt_num(c.tolerance),
                ])
                .map_err(io::csv_err)?;
            }
            w.flush()?;
        }
        Format::Table => out.write_all(report.to_table().as_bytes())?,
    }
    out.flush()?;
    Ok(if report.overall {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

/// One row of the comparison table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub n: usize,
    pub pi_rejective: Vec<f64>,
    pub pi_successive: Vec<f64>,
    pub entropy_rejective: f64,
    pub entropy_successive: f64,
    pub divergence_rejective: f64,
    pub divergence_successive: f64,
    /// `exact` or `monte-carlo`.
    pub successive_source: &'static str,
}

/// Builds comparison rows for the requested sizes; successive profiles are
/// exact up to `cutoff` and Monte Carlo estimates beyond it.
pub fn compare_rows(
    alpha: &DrawingProbabilities,
    sizes: &[usize],
    cutoff: usize,
    reps: u64,
    seed: u64,
) -> Result<Vec<CompareRow>> {
    let rejective = rejective_profiles(alpha, Execution::default());
    let exact = match successive_profiles(alpha, cutoff) {
        Ok(p) => Some(p),
        Err(Error::Capability { .. }) => None,
        Err(e) => return Err(e),
    };
    sizes
        .iter()
        .map(|&n| {
            let r = &rejective[n - 1];
            let (pi_s, source) = match &exact {
                Some(all) => (all[n - 1].pi.clone(), "exact"),
                None => {
                    let est = empirical_inclusion(
                        Scheme::Successive,
                        alpha,
                        SampleSize::new(n, alpha)?,
                        reps.max(1),
                        replication_seed(seed, n as u64),
                    )?;
                    (est.pi_hat, "monte-carlo")
                }
            };
            let ps: Vec<f64> = pi_s.iter().map(|p| p / n as f64).collect();
            Ok(CompareRow {
                n,
                entropy_rejective: entropy(&r.per_draw),
                entropy_successive: entropy(&ps),
                divergence_rejective: kl_divergence(&r.per_draw, alpha.as_slice()),
                divergence_successive: kl_divergence(&ps, alpha.as_slice()),
                pi_rejective: r.pi.clone(),
                pi_successive: pi_s,
                successive_source: source,
            })
        })
        .collect()
}

fn cmd_compare(a: CompareArgs) -> Result<i32> {
    let alpha = load_alpha(&a.input)?;
    let sizes = parse_sizes(&a.n, alpha.len())?;
    let rows = compare_rows(&alpha, &sizes, a.exact_cutoff, a.reps, a.seed)?;
    let mut out = open_output(&a.output)?;
    let join = |v: &[f64], prec: Option<usize>| {
        v.iter()
            .map(|x| match prec {
                Some(p) => format!("{x:.p$}"),
                None => io::fmt_num(*x),
            })
            .collect::<Vec<_>>()
            .join(";")
    };
    match a.output.format.unwrap_or(Format::Table) {
        Format::Json => io::write_json(&mut out, &rows)?,
        Format::Csv => {
            writeln!(out, "n,pi_rejective,pi_successive,entropy_rejective,entropy_successive,divergence_rejective,divergence_successive,successive_source")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    join(&r.pi_rejective, None),
                    join(&r.pi_successive, None),
                    io::fmt_num(r.entropy_rejective),
                    io::fmt_num(r.entropy_successive),
                    io::fmt_num(r.divergence_rejective),
                    io::fmt_num(r.divergence_successive),
                    r.successive_source
                )?;
            }
        }
        Format::Table => {
            let w = alpha.len() * 9;
            writeln!(
                out,
                "{:>3}  {:<w$}  {:<w$}  {:>9}  {:>9}  {:>11}  {:>11}",
                "n", "pi_R", "pi_S", "H(p_R)", "H(p_S)", "D(p_R‖α)", "D(p_S‖α)"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>3}  {:<w$}  {:<w$}  {:>9.6}  {:>9.6}  {:>11.4e}  {:>11.4e}{}",
                    r.n,
                    join(&r.pi_rejective, Some(6)).replace(';', " "),
                    join(&r.pi_successive, Some(6)).replace(';', " "),
                    r.entropy_rejective,
                    r.entropy_successive,
                    r.divergence_rejective,
                    r.divergence_successive,
                    if r.successive_source == "exact" {
                        ""
                    } else {
                        "  (successive: monte carlo)"
                    }
                )?;
            }
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_specs() {
        assert_eq!(parse_sizes("all", 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_sizes("2", 3).unwrap(), vec![2]);
        assert_eq!(parse_sizes("1..2", 3).unwrap(), vec![1, 2]);
        assert_eq!(parse_sizes("2-3", 3).unwrap(), vec![2, 3]);
        assert_eq!(parse_sizes("1..=3", 3).unwrap(), vec![1, 2, 3]);
        assert!(matches!(parse_sizes("4", 3), Err(Error::Argument(_))));
        assert!(matches!(parse_sizes("0", 3), Err(Error::Argument(_))));
        assert!(matches!(parse_sizes("x", 3), Err(Error::Parse(_))));
    }

    #[test]
    fn compare_rows_for_worked_example() {
        let a = DrawingProbabilities::new(vec![0.5, 0.3, 0.2]).unwrap();
        let rows = compare_rows(&a, &[1, 2, 3], 20, 1000, 0).unwrap();
        assert_eq!(rows[0].divergence_rejective, 0.0);
        assert!(rows[0].divergence_successive.abs() < 1e-15);
        for r in &rows {
            assert!(r.divergence_rejective >= r.divergence_successive - 1e-12);
        }
        for w in rows.windows(2) {
            assert!(w[1].divergence_rejective >= w[0].divergence_rejective);
            assert!(w[1].divergence_successive >= w[0].divergence_successive);
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code(&Error::Domain("x".into())), 3);
        assert_eq!(exit_code(&Error::Argument("x".into())), 3);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
