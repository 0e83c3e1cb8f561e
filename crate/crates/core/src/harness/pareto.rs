//! Weighted-sum multiobjective pipeline: one scalarized run per lattice
//! weight vector, then a Pareto filter over the union of results.

use serde::{Deserialize, Serialize};

use crate::ba::config::{BaConfig, Variant};
use crate::error::{invalid, Result};
use crate::harness::batch::{map_runs, run_single, RunResult, Workers};
use crate::variants::multiobjective::{pareto_indices, weight_lattice, MultiProblem};

/// One scalarized run's outcome mapped back to objective space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrontPoint {
    pub weights: Vec<f64>,
    pub position: Vec<f64>,
    pub objectives: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiobjectiveResult {
    /// Every weight vector's result, in lattice order.
    pub points: Vec<FrontPoint>,
    /// Indices into `points` of the non-dominated results.
    pub front: Vec<usize>,
    /// Per-weight runs; their fitness is the scalarized objective.
    pub runs: Vec<RunResult>,
}

impl MultiobjectiveResult {
    pub fn front_points(&self) -> Vec<FrontPoint> {
        self.front.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// Runs one scalarized optimization per weight vector of the simplex
/// lattice, with run `k` seeded from `(config.seed, k)`.
pub fn run_multiobjective(
    problem: &MultiProblem,
    config: &BaConfig,
    workers: Workers,
    timed: bool,
) -> Result<MultiobjectiveResult> {
    let Variant::Multiobjective { divisions } = config.variant else {
        return Err(invalid("multiobjective pipeline needs the multiobjective variant"));
    };
    config.validate()?;
    let lattice = weight_lattice(problem.n_objectives(), divisions)?;
    let runs = map_runs(lattice.len(), workers, |k| {
        let scalar = problem.scalarized(&lattice[k])?;
        run_single(&scalar, config, k, timed)
    })?;
    let points: Vec<FrontPoint> = runs
        .iter()
        .zip(&lattice)
        .map(|(run, w)| FrontPoint {
            weights: w.as_slice().to_vec(),
            position: run.best_position.clone(),
            objectives: problem.evaluate(&run.best_position),
        })
        .collect();
    let objectives: Vec<Vec<f64>> = points.iter().map(|p| p.objectives.clone()).collect();
    let front = pareto_indices(&objectives);
    Ok(MultiobjectiveResult { points, front, runs })
}
