//! Command-line runner.
//!
//! Exit codes: `0` success, `1` usage error, `2` runtime error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{error::ErrorKind, Parser, ValueEnum};

use crate::ba::config::{AttractionSign, BaConfig, BoundMode, Variant};
use crate::ba::trace::RunTrace;
use crate::harness::batch::{BatchRunner, RunResult, RunSummary, Workers};
use crate::harness::output::{write_summary_document, write_trace_csv, SummaryDocument};
use crate::harness::pareto::run_multiobjective;
use crate::problems::{lookup, RegisteredProblem, MULTI_OBJECTIVE_NAMES, SINGLE_OBJECTIVE_NAMES};
use crate::variants::levy::LevyConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RUNTIME: i32 = 2;

/// Margin above the known optimum counted as a successful run when no
/// `--target` is given.
pub const DEFAULT_SUCCESS_MARGIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Standard,
    Levy,
    Chaotic,
    Binary,
    Multiobjective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundArg {
    Clamp,
    Reflect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Classic,
    Reversed,
}

/// Run the bat algorithm on a benchmark problem and report statistics.
#[derive(Debug, Parser)]
#[command(name = "batswarm", disable_version_flag = true)]
struct Args {
    /// Benchmark name: sphere, rosenbrock, rastrigin, ackley or schaffer.
    #[arg(long, default_value = "sphere")]
    problem: String,
    /// Dimension (default 10; schaffer is one-dimensional).
    #[arg(long, value_parser = positive_usize)]
    dim: Option<usize>,
    /// Number of bats.
    #[arg(long, default_value_t = 25, value_parser = positive_usize)]
    bats: usize,
    /// Iteration budget per run.
    #[arg(long, default_value_t = 1000)]
    iters: usize,
    /// Independent runs.
    #[arg(long, default_value_t = 1, value_parser = positive_usize)]
    runs: usize,
    /// Master seed; run r uses a stream derived from (seed, r).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Loudness decay factor, in (0, 1].
    #[arg(long, default_value_t = 0.9, value_parser = unit_open_closed)]
    alpha: f64,
    /// Pulse-rate growth constant, > 0.
    #[arg(long, default_value_t = 0.9, value_parser = positive_f64)]
    gamma: f64,
    #[arg(long, default_value_t = 0.0, value_parser = finite_f64)]
    fmin: f64,
    #[arg(long, default_value_t = 2.0, value_parser = finite_f64)]
    fmax: f64,
    /// Initial loudness, > 0.
    #[arg(long, default_value_t = 0.5, value_parser = positive_f64)]
    loudness0: f64,
    /// Initial (asymptotic) pulse rate, in [0, 1].
    #[arg(long, default_value_t = 0.5, value_parser = unit_closed)]
    pulse0: f64,
    #[arg(long, value_enum, default_value_t = VariantArg::Standard)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = BoundArg::Clamp)]
    bound_mode: BoundArg,
    #[arg(long, value_enum, default_value_t = SignArg::Classic)]
    attraction_sign: SignArg,
    /// Trace CSV path; with several runs, run r goes to <stem>_run<r>.<ext>.
    #[arg(long)]
    trace_out: Option<PathBuf>,
    /// Summary JSON path (the summary is also printed on stdout).
    #[arg(long)]
    summary_out: Option<PathBuf>,
    /// Keep every k-th trace record (plus the last).
    #[arg(long, default_value_t = 1, value_parser = positive_u64)]
    trace_every: u64,
    /// Target fitness: stops a run early and defines success.
    #[arg(long, value_parser = not_nan_f64)]
    target: Option<f64>,
    /// Worker threads for independent runs (default: all cores).
    #[arg(long, value_parser = positive_usize)]
    workers: Option<usize>,
    /// Lévy stability exponent, in (1, 2].
    #[arg(long, default_value_t = 1.5)]
    levy_exponent: f64,
    /// Lévy step scale, >= 0.
    #[arg(long, default_value_t = 0.1)]
    levy_scale: f64,
    /// Fraction of bats taking a Lévy step each iteration.
    #[arg(long, default_value_t = 0.1, value_parser = unit_closed)]
    levy_fraction: f64,
    /// Initial value of the logistic map.
    #[arg(long, default_value_t = 0.7, value_parser = unit_closed)]
    chaos_init: f64,
    /// Weight lattice divisions for the multiobjective variant.
    #[arg(long, default_value_t = 10, value_parser = positive_usize)]
    divisions: usize,
    /// Add mean wall time to the summary (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
}

fn parse_f64(s: &str) -> Result<f64, String> {
    s.parse::<f64>().map_err(|e| e.to_string())
}

fn not_nan_f64(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v.is_nan() {
        Err("must not be NaN".into())
    } else {
        Ok(v)
    }
}

fn finite_f64(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err("must be finite".into())
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v = finite_f64(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err("must be > 0".into())
    }
}

fn unit_open_closed(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err("must be in (0, 1]".into())
    }
}

fn unit_closed(s: &str) -> Result<f64, String> {
    let v = parse_f64(s)?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err("must be in [0, 1]".into())
    }
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be >= 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u64(s: &str) -> Result<u64, String> {
    positive_usize(s).map(|v| v as u64)
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Runtime(_) => EXIT_RUNTIME,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn runtime(msg: impl ToString) -> CliError {
    CliError::Runtime(msg.to_string())
}

/// Parses `argv` (program name first), runs the batch and writes outputs.
/// Returns the process exit code.
pub fn cli_main<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&args, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.code()
        }
    }
}

fn build_config(args: &Args, multi: bool) -> Result<BaConfig, CliError> {
    if args.fmin > args.fmax {
        return Err(usage(format!(
            "invalid value for '--fmin': {} exceeds '--fmax' {}",
            args.fmin, args.fmax
        )));
    }
    let variant = match args.variant {
        VariantArg::Standard => Variant::Standard,
        VariantArg::Levy => {
            let levy = LevyConfig {
                stability_exponent: args.levy_exponent,
                scale: args.levy_scale,
            };
            levy.validate()
                .map_err(|e| usage(format!("invalid value for '--levy-exponent'/'--levy-scale': {e}")))?;
            Variant::Levy {
                levy,
                fraction: args.levy_fraction,
            }
        }
        VariantArg::Chaotic => Variant::Chaotic {
            initial: args.chaos_init,
        },
        VariantArg::Binary => Variant::Binary,
        VariantArg::Multiobjective => Variant::Multiobjective {
            divisions: args.divisions,
        },
    };
    let is_multi_variant = matches!(variant, Variant::Multiobjective { .. });
    if multi != is_multi_variant {
        return Err(usage(format!(
            "invalid value for '--variant': '{}' cannot be used with problem '{}'{}",
            variant.name(),
            args.problem,
            if multi {
                " (multiobjective problems need --variant multiobjective)"
            } else {
                " (needs a multiobjective problem such as schaffer)"
            }
        )));
    }
    let config = BaConfig {
        n_bats: args.bats,
        f_min: args.fmin,
        f_max: args.fmax,
        alpha: args.alpha,
        gamma: args.gamma,
        initial_loudness: args.loudness0,
        min_loudness: 0.0,
        initial_pulse_rate: args.pulse0,
        max_iterations: args.iters,
        target_fitness: args.target,
        seed: args.seed,
        bound_mode: match args.bound_mode {
            BoundArg::Clamp => BoundMode::Clamp,
            BoundArg::Reflect => BoundMode::Reflect,
        },
        attraction_sign: match args.attraction_sign {
            SignArg::Classic => AttractionSign::Classic,
            SignArg::Reversed => AttractionSign::Reversed,
        },
        variant,
    };
    config.validate().map_err(|e| usage(e.to_string()))?;
    Ok(config)
}

fn execute(args: &Args, stdout: &mut dyn Write) -> Result<(), CliError> {
    let is_multi = MULTI_OBJECTIVE_NAMES.contains(&args.problem.as_str());
    if !is_multi && !SINGLE_OBJECTIVE_NAMES.contains(&args.problem.as_str()) {
        return Err(usage(format!(
            "invalid value '{}' for '--problem': unknown problem (available: {}, {})",
            args.problem,
            SINGLE_OBJECTIVE_NAMES.join(", "),
            MULTI_OBJECTIVE_NAMES.join(", ")
        )));
    }
    let dim = args.dim.unwrap_or(if is_multi { 1 } else { 10 });
    let registered = lookup(&args.problem, dim)
        .map_err(|e| usage(format!("invalid value for '--dim': {e}")))?;
    let config = build_config(args, is_multi)?;
    let workers = args.workers.map_or(Workers::Auto, Workers::Threads);

    let (runs, doc) = match registered {
        RegisteredProblem::Single(bench) => {
            let problem = bench.problem();
            let threshold = args
                .target
                .or(Some(bench.spec.known_optimum_value + DEFAULT_SUCCESS_MARGIN));
            let result = BatchRunner::new(&problem, config)
                .runs(args.runs)
                .workers(workers)
                .success_threshold(threshold)
                .timed(args.timing)
                .execute()
                .map_err(runtime)?;
            let doc = SummaryDocument {
                problem: Some(bench.spec.name.to_owned()),
                dimension: Some(dim),
                ..SummaryDocument::new(result.summary, config)
            };
            (result.runs, doc)
        }
        RegisteredProblem::Multi(bench) => {
            let result = run_multiobjective(&bench.problem, &config, workers, args.timing)
                .map_err(runtime)?;
            let summary = RunSummary::from_runs(&result.runs, args.target, args.timing)
                .map_err(runtime)?;
            let doc = SummaryDocument {
                problem: Some(bench.name.to_owned()),
                dimension: Some(dim),
                front: Some(result.front_points()),
                ..SummaryDocument::new(summary, config)
            };
            (result.runs, doc)
        }
    };

    if let Some(path) = &args.trace_out {
        write_traces(path, &runs, args.trace_every)?;
    }
    if let Some(path) = &args.summary_out {
        let file = File::create(path).map_err(|e| runtime(format!("{}: {e}", path.display())))?;
        write_summary_document(&doc, BufWriter::new(file)).map_err(runtime)?;
    }
    write_summary_document(&doc, stdout).map_err(runtime)?;
    Ok(())
}

/// Per-run trace path: `path` itself for a single run, otherwise
/// `<stem>_run<r>.<ext>` with `r` zero-padded to three digits.
pub fn trace_path(path: &Path, run: usize, n_runs: usize) -> PathBuf {
    if n_runs == 1 {
        return path.to_path_buf();
    }
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_run{run:03}.{}", ext.to_string_lossy()),
        None => format!("{stem}_run{run:03}"),
    };
    path.with_file_name(name)
}

fn write_traces(path: &Path, runs: &[RunResult], every: u64) -> Result<(), CliError> {
    for run in runs {
        let target = trace_path(path, run.run, runs.len());
        let file = File::create(&target).map_err(|e| runtime(format!("{}: {e}", target.display())))?;
        let trace: RunTrace = run.trace.thinned(every);
        write_trace_csv(&trace, BufWriter::new(file)).map_err(runtime)?;
    }
    Ok(())
}
