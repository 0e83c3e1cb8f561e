//! Independent repeated runs and their aggregate statistics.
//!
//! Run `r` always draws from the child stream of `(config.seed, r)` and
//! results are gathered by run index, so the outcome does not depend on how
//! many workers execute the batch.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::ba::config::BaConfig;
use crate::ba::engine::Engine;
use crate::ba::problem::Problem;
use crate::ba::trace::RunTrace;
use crate::error::{invalid, BatError, Result};
use crate::rng::{child_seed, RandomStream};

/// How the independent runs of a batch are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Workers {
    /// One run after another on the calling thread.
    Sequential,
    /// A dedicated pool with this many threads.
    Threads(usize),
    /// The global rayon pool.
    #[default]
    Auto,
}

/// Outcome of one run of a batch.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub run: usize,
    pub seed: u64,
    pub best_fitness: f64,
    pub best_position: Vec<f64>,
    pub evaluations: u64,
    pub trace: RunTrace,
    /// Seconds spent in the run; only measured for timed batches.
    pub wall_time: Option<f64>,
}

/// Statistics over the final best fitness of every run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub n_runs: usize,
    pub best: f64,
    pub worst: f64,
    pub mean: f64,
    pub median: f64,
    /// Sample standard deviation; zero for a single run.
    pub std_dev: f64,
    /// Threshold used for success accounting, if any.
    pub success_threshold: Option<f64>,
    /// Fraction of runs whose final best fitness reached the threshold.
    pub success_rate: Option<f64>,
    pub evaluations_mean: f64,
    /// Mean wall-clock seconds per run; only present for timed batches.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_mean: Option<f64>,
}

impl RunSummary {
    /// Summarizes runs given in run-index order.
    pub fn from_runs(runs: &[RunResult], success_threshold: Option<f64>, timed: bool) -> Result<Self> {
        let finals: Vec<f64> = runs.iter().map(|r| r.best_fitness).collect();
        let evaluations: Vec<f64> = runs.iter().map(|r| r.evaluations as f64).collect();
        let mut summary = Self::from_values(&finals, success_threshold)?;
        summary.evaluations_mean = mean(&evaluations);
        if timed {
            let times: Option<Vec<f64>> = runs.iter().map(|r| r.wall_time).collect();
            summary.wall_time_mean = times.map(|t| mean(&t));
        }
        Ok(summary)
    }

    /// Summary statistics of a list of final fitness values.
    pub fn from_values(finals: &[f64], success_threshold: Option<f64>) -> Result<Self> {
        if finals.is_empty() {
            return Err(invalid("cannot summarize zero runs"));
        }
        let mut sorted = finals.to_vec();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        let best = sorted[0];
        let worst = sorted[n - 1];
        // Rounding in the mean must not escape [best, worst].
        let m = mean(finals).clamp(best, worst);
        let median = if n % 2 == 1 {
            sorted[n / 2]
        } else {
            0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
        };
        let std_dev = if n > 1 {
            (finals.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
        } else {
            0.0
        };
        let success_rate = success_threshold
            .map(|t| finals.iter().filter(|&&v| v <= t).count() as f64 / n as f64);
        Ok(Self {
            n_runs: n,
            best,
            worst,
            mean: m,
            median,
            std_dev,
            success_threshold,
            success_rate,
            evaluations_mean: 0.0,
            wall_time_mean: None,
        })
    }
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Summary plus every run, in run-index order.
#[derive(Debug, Clone, PartialEq)]
pub struct BatchResult {
    pub summary: RunSummary,
    pub runs: Vec<RunResult>,
}

impl BatchResult {
    pub fn traces(&self) -> impl Iterator<Item = &RunTrace> {
        self.runs.iter().map(|r| &r.trace)
    }
}

/// Evaluates `job(0..n)` with the requested scheduling and returns results
/// in index order. The lowest failing index wins when several jobs fail.
pub fn map_runs<T, F>(n: usize, workers: Workers, job: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    let results: Vec<Result<T>> = schedule(n, workers, &job)?;
    results
        .into_iter()
        .enumerate()
        .map(|(run, r)| {
            r.map_err(|source| BatError::Run {
                run,
                source: Box::new(source),
            })
        })
        .collect()
}

#[cfg(feature = "parallel")]
fn schedule<T, F>(n: usize, workers: Workers, job: &F) -> Result<Vec<Result<T>>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    use rayon::prelude::*;

    Ok(match workers {
        Workers::Sequential => (0..n).map(job).collect(),
        Workers::Auto => (0..n).into_par_iter().map(job).collect(),
        Workers::Threads(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .map_err(|e| invalid(format!("cannot build worker pool: {e}")))?;
            pool.install(|| (0..n).into_par_iter().map(job).collect())
        }
    })
}

#[cfg(not(feature = "parallel"))]
fn schedule<T, F>(n: usize, _workers: Workers, job: &F) -> Result<Vec<Result<T>>>
where
    T: Send,
    F: Fn(usize) -> Result<T> + Sync + Send,
{
    Ok((0..n).map(job).collect())
}

/// Runs one seeded run of a batch.
pub fn run_single(problem: &Problem, config: &BaConfig, run: usize, timed: bool) -> Result<RunResult> {
    let seed = child_seed(config.seed, run as u64);
    let start = Instant::now();
    let (state, trace) = Engine::with_stream(problem, *config, RandomStream::from_seed(seed))?.run()?;
    Ok(RunResult {
        run,
        seed,
        best_fitness: state.best_fitness,
        best_position: state.best_position,
        evaluations: state.evaluations,
        trace,
        wall_time: timed.then(|| start.elapsed().as_secs_f64()),
    })
}

/// Builder for a batch of independent runs.
#[derive(Debug, Clone)]
pub struct BatchRunner<'p> {
    problem: &'p Problem,
    config: BaConfig,
    n_runs: usize,
    workers: Workers,
    success_threshold: Option<f64>,
    timed: bool,
}

impl<'p> BatchRunner<'p> {
    /// Defaults: one run, the global worker pool, success measured against
    /// `config.target_fitness`, no timing.
    pub fn new(problem: &'p Problem, config: BaConfig) -> Self {
        Self {
            problem,
            config,
            n_runs: 1,
            workers: Workers::Auto,
            success_threshold: config.target_fitness,
            timed: false,
        }
    }

    pub fn runs(mut self, n_runs: usize) -> Self {
        self.n_runs = n_runs;
        self
    }

    pub fn workers(mut self, workers: Workers) -> Self {
        self.workers = workers;
        self
    }

    pub fn success_threshold(mut self, threshold: Option<f64>) -> Self {
        self.success_threshold = threshold;
        self
    }

    /// Records mean wall time in the summary. Timed summaries are not
    /// reproducible byte for byte.
    pub fn timed(mut self, timed: bool) -> Self {
        self.timed = timed;
        self
    }

    pub fn execute(&self) -> Result<BatchResult> {
        if self.n_runs == 0 {
            return Err(invalid("n_runs must be at least 1"));
        }
        self.config.validate()?;
        let runs = map_runs(self.n_runs, self.workers, |r| {
            run_single(self.problem, &self.config, r, self.timed)
        })?;
        let summary = RunSummary::from_runs(&runs, self.success_threshold, self.timed)?;
        Ok(BatchResult { summary, runs })
    }
}

/// `n_runs` independent runs with default scheduling.
pub fn run_batch(problem: &Problem, config: &BaConfig, n_runs: usize) -> Result<BatchResult> {
    BatchRunner::new(problem, *config).runs(n_runs).execute()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ObjectiveError;

    fn sphere(d: usize) -> Problem {
        Problem::new(vec![-5.0; d], vec![10.0; d], |x| x.iter().map(|v| v * v).sum()).unwrap()
    }

    fn small() -> BaConfig {
        BaConfig {
            max_iterations: 30,
            n_bats: 10,
            seed: 5,
            ..BaConfig::default()
        }
    }

    #[test]
    fn single_run_summary_is_degenerate() {
        let result = run_batch(&sphere(3), &small(), 1).unwrap();
        let s = &result.summary;
        assert_eq!(s.n_runs, 1);
        assert_eq!(s.best, s.worst);
        assert_eq!(s.best, s.mean);
        assert_eq!(s.std_dev, 0.0);
        assert_eq!(s.wall_time_mean, None);
    }

    #[test]
    fn batch_is_deterministic() {
        let a = run_batch(&sphere(3), &small(), 6).unwrap();
        let b = run_batch(&sphere(3), &small(), 6).unwrap();
        assert_eq!(a.summary, b.summary);
        assert!(a.traces().eq(b.traces()));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let p = sphere(4);
        let seq = BatchRunner::new(&p, small()).runs(8).workers(Workers::Sequential).execute().unwrap();
        let par = BatchRunner::new(&p, small()).runs(8).workers(Workers::Threads(4)).execute().unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn zero_runs_rejected() {
        assert!(run_batch(&sphere(2), &small(), 0).is_err());
    }

    #[test]
    fn failing_run_is_reported_by_index() {
        let p = Problem::fallible(vec![-1.0], vec![1.0], |_| Err(ObjectiveError::Failed("nope".into()))).unwrap();
        let err = run_batch(&p, &small(), 3).unwrap_err();
        assert!(matches!(err, BatError::Run { run: 0, .. }));
    }

    #[test]
    fn summary_statistics() {
        let s = RunSummary::from_values(&[3.0, 1.0, 2.0, 4.0], Some(2.0)).unwrap();
        assert_eq!((s.best, s.worst, s.mean, s.median), (1.0, 4.0, 2.5, 2.5));
        assert_eq!(s.success_rate, Some(0.5));
        let expected_sd = (5.0f64 / 3.0).sqrt();
        assert!((s.std_dev - expected_sd).abs() < 1e-15);
        let s = RunSummary::from_values(&[0.1, 0.1, 0.1], None).unwrap();
        assert!(s.best <= s.mean && s.mean <= s.worst);
        assert_eq!(s.success_rate, None);
    }

    #[test]
    fn timed_batch_reports_wall_time() {
        let p = sphere(2);
        let r = BatchRunner::new(&p, small()).runs(2).timed(true).execute().unwrap();
        assert!(r.summary.wall_time_mean.unwrap() >= 0.0);
    }
}
