//! Bat algorithm optimizer with Lévy-flight, chaotic, binary and
//! weighted-sum multiobjective variants, a benchmark suite and a seeded
//! experiment harness.
//!
//! ```
//! use batswarm::{problems, BaConfig};
//!
//! let problem = problems::benchmark("sphere", 5).unwrap().problem();
//! let config = BaConfig { max_iterations: 200, seed: 7, ..BaConfig::default() };
//! let (state, trace) = batswarm::run(&problem, &config).unwrap();
//! assert!(state.best_fitness <= trace.records[0].best_fitness);
//! ```

// `!(x >= 0.0)` style checks reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ba;
pub mod error;
pub mod harness;
pub mod problems;
pub mod rng;
pub mod variants;

pub use ba::{run, BaConfig, Engine, Problem, RunTrace, SwarmState, TraceRecord, Variant};
pub use error::{BatError, ObjectiveError, Result};
pub use harness::{cli_main, run_batch, BatchRunner, RunSummary, Workers};
pub use rng::RandomStream;
