//! Experiment harness: batches of seeded runs, baselines, output formats and
//! the command-line entry point.

pub mod baseline;
pub mod batch;
pub mod cli;
pub mod output;
pub mod pareto;

pub use baseline::random_search;
pub use batch::{map_runs, run_batch, run_single, BatchResult, BatchRunner, RunResult, RunSummary, Workers};
pub use cli::cli_main;
pub use output::{
    read_summary_json, read_trace_csv, write_summary_document, write_summary_json, write_trace_csv,
    SummaryDocument, TRACE_HEADER,
};
pub use pareto::{run_multiobjective, FrontPoint, MultiobjectiveResult};
