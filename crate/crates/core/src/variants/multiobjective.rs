//! Weighted-sum scalarization and Pareto filtering.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ba::problem::{validate_bounds, Problem};
use crate::error::{check_len, invalid, Result};

/// Tolerance on `sum(weights) == 1`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

/// Non-negative weights summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ScalarizationWeights(Vec<f64>);

impl ScalarizationWeights {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(invalid("weight vector must not be empty"));
        }
        if let Some(w) = weights.iter().find(|w| !(**w >= 0.0 && w.is_finite())) {
            return Err(invalid(format!("weights must be non-negative (got {w})")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(invalid(format!("weights must sum to 1 (got {sum})")));
        }
        Ok(Self(weights))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for ScalarizationWeights {
    type Error = crate::error::BatError;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<ScalarizationWeights> for Vec<f64> {
    fn from(value: ScalarizationWeights) -> Self {
        value.0
    }
}

/// Weighted sum of objective values.
pub fn scalarize(objectives: &[f64], weights: &ScalarizationWeights) -> Result<f64> {
    check_len(weights.len(), objectives.len())?;
    Ok(objectives.iter().zip(weights.as_slice()).map(|(f, w)| f * w).sum())
}

/// All weight vectors `k / divisions` with non-negative integer `k` summing
/// to `divisions`, in lexicographically descending order of `k`. The pure
/// corners are always included.
pub fn weight_lattice(n_objectives: usize, divisions: usize) -> Result<Vec<ScalarizationWeights>> {
    if n_objectives == 0 || divisions == 0 {
        return Err(invalid("lattice needs at least one objective and one division"));
    }
    let mut out = Vec::new();
    let mut counts = Vec::with_capacity(n_objectives);
    compositions(n_objectives, divisions, &mut counts, &mut out);
    out.into_iter()
        .map(|counts| {
            let mut w: Vec<f64> = counts.iter().map(|&k| k as f64 / divisions as f64).collect();
            // Push rounding residue into the last component so the sum is exact
            // to within one ulp.
            let head: f64 = w[..n_objectives - 1].iter().sum();
            w[n_objectives - 1] = (1.0 - head).max(0.0);
            ScalarizationWeights::new(w)
        })
        .collect()
}

fn compositions(parts: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        prefix.push(remaining);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for k in (0..=remaining).rev() {
        prefix.push(k);
        compositions(parts - 1, remaining - k, prefix, out);
        prefix.pop();
    }
}

/// `a` dominates `b` when it is no worse everywhere and better somewhere.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strictly = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly = true;
        }
    }
    strictly
}

/// Indices of the non-dominated points, in input order.
pub fn pareto_indices(points: &[Vec<f64>]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| !points.iter().any(|q| dominates(q, &points[i])))
        .collect()
}

/// The non-dominated subset of `points` (minimization), in input order.
pub fn pareto_filter(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    pareto_indices(points)
        .into_iter()
        .map(|i| points[i].clone())
        .collect()
}

type VectorObjective = dyn Fn(&[f64]) -> Vec<f64> + Send + Sync;

/// A box-constrained problem with several objectives, all minimized.
#[derive(Clone)]
pub struct MultiProblem {
    lower: Vec<f64>,
    upper: Vec<f64>,
    n_objectives: usize,
    objectives: Arc<VectorObjective>,
}

impl MultiProblem {
    pub fn new<F>(lower: Vec<f64>, upper: Vec<f64>, n_objectives: usize, objectives: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        validate_bounds(&lower, &upper)?;
        if n_objectives == 0 {
            return Err(invalid("a multiobjective problem needs at least one objective"));
        }
        Ok(Self {
            lower,
            upper,
            n_objectives,
            objectives: Arc::new(objectives),
        })
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn n_objectives(&self) -> usize {
        self.n_objectives
    }

    pub fn lower_bounds(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper_bounds(&self) -> &[f64] {
        &self.upper
    }

    pub fn evaluate(&self, x: &[f64]) -> Vec<f64> {
        (self.objectives)(x)
    }

    /// Single-objective problem minimizing the weighted sum.
    pub fn scalarized(&self, weights: &ScalarizationWeights) -> Result<Problem> {
        check_len(self.n_objectives, weights.len())?;
        let objectives = Arc::clone(&self.objectives);
        let weights = weights.clone();
        Problem::fallible(self.lower.clone(), self.upper.clone(), move |x| {
            scalarize(&objectives(x), &weights)
                .map_err(|e| crate::error::ObjectiveError::Failed(e.to_string()))
        })
    }
}

impl fmt::Debug for MultiProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiProblem")
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .field("n_objectives", &self.n_objectives)
            .finish_non_exhaustive()
    }
}
