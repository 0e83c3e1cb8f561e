//! Benchmark objectives with known optima, and a registry keyed by name and
//! dimension.

use std::f64::consts::{E, PI};

use serde::Serialize;

use crate::ba::problem::Problem;
use crate::error::{invalid, Result};
use crate::variants::multiobjective::MultiProblem;

/// Tolerance of the optimum self-check run when a benchmark is built.
pub const OPTIMUM_CHECK_TOLERANCE: f64 = 1e-12;

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn rosenbrock(x: &[f64]) -> Result<f64> {
    if x.len() < 2 {
        return Err(invalid(format!(
            "rosenbrock needs dimension >= 2 (got {})",
            x.len()
        )));
    }
    Ok(rosenbrock_unchecked(x))
}

fn rosenbrock_unchecked(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2))
        .sum()
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

pub fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / d;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

/// Convex bi-objective test `(x^2, (x - 2)^2)`; its Pareto set is `[0, 2]`.
pub fn schaffer_bi_objective(x: f64) -> (f64, f64) {
    (x * x, (x - 2.0) * (x - 2.0))
}

/// Metadata of a single-objective benchmark.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchmarkSpec {
    pub name: &'static str,
    pub dimension: usize,
    pub lower: f64,
    pub upper: f64,
    pub known_optimum_position: Vec<f64>,
    pub known_optimum_value: f64,
}

/// A registered single-objective benchmark.
#[derive(Debug, Clone)]
pub struct Benchmark {
    pub spec: BenchmarkSpec,
    objective: fn(&[f64]) -> f64,
}

impl Benchmark {
    fn new(spec: BenchmarkSpec, objective: fn(&[f64]) -> f64) -> Result<Self> {
        let at_optimum = objective(&spec.known_optimum_position);
        if (at_optimum - spec.known_optimum_value).abs() > OPTIMUM_CHECK_TOLERANCE {
            return Err(invalid(format!(
                "{} optimum self-check failed: f(x*) = {at_optimum}, expected {}",
                spec.name, spec.known_optimum_value
            )));
        }
        Ok(Self { spec, objective })
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        (self.objective)(x)
    }

    pub fn problem(&self) -> Problem {
        let d = self.spec.dimension;
        Problem::new(vec![self.spec.lower; d], vec![self.spec.upper; d], self.objective)
            .expect("benchmark bounds are valid")
    }
}

/// A registered multiobjective benchmark.
#[derive(Debug, Clone)]
pub struct MultiBenchmark {
    pub name: &'static str,
    pub problem: MultiProblem,
    /// Closed interval of each coordinate on the Pareto set, when known.
    pub pareto_set: Option<(f64, f64)>,
}

#[derive(Debug, Clone)]
pub enum RegisteredProblem {
    Single(Benchmark),
    Multi(MultiBenchmark),
}

impl RegisteredProblem {
    pub fn name(&self) -> &'static str {
        match self {
            RegisteredProblem::Single(b) => b.spec.name,
            RegisteredProblem::Multi(m) => m.name,
        }
    }
}

pub const SINGLE_OBJECTIVE_NAMES: [&str; 4] = ["sphere", "rosenbrock", "rastrigin", "ackley"];
pub const MULTI_OBJECTIVE_NAMES: [&str; 1] = ["schaffer"];

/// Looks up a single-objective benchmark by name.
pub fn benchmark(name: &str, dimension: usize) -> Result<Benchmark> {
    if dimension == 0 {
        return Err(invalid("dimension must be positive"));
    }
    let zeros = vec![0.0; dimension];
    let (lower, upper, optimum, objective): (f64, f64, Vec<f64>, fn(&[f64]) -> f64) = match name {
        "sphere" => (-5.0, 10.0, zeros, sphere),
        "rosenbrock" => {
            if dimension < 2 {
                return Err(invalid(format!(
                    "rosenbrock needs dimension >= 2 (got {dimension})"
                )));
            }
            (-5.0, 10.0, vec![1.0; dimension], rosenbrock_unchecked)
        }
        "rastrigin" => (-5.12, 5.12, zeros, rastrigin),
        "ackley" => (-32.768, 32.768, zeros, ackley),
        other => return Err(invalid(format!("unknown problem '{other}'"))),
    };
    Benchmark::new(
        BenchmarkSpec {
            name: SINGLE_OBJECTIVE_NAMES
                .iter()
                .find(|n| **n == name)
                .copied()
                .expect("matched above"),
            dimension,
            lower,
            upper,
            known_optimum_position: optimum,
            known_optimum_value: 0.0,
        },
        objective,
    )
}

/// The bi-objective Schaffer problem on `[-10, 10]`.
pub fn schaffer() -> MultiBenchmark {
    let problem = MultiProblem::new(vec![-10.0], vec![10.0], 2, |x| {
        let (f1, f2) = schaffer_bi_objective(x[0]);
        vec![f1, f2]
    })
    .expect("schaffer bounds are valid");
    MultiBenchmark {
        name: "schaffer",
        problem,
        pareto_set: Some((0.0, 2.0)),
    }
}

/// Looks up any registered problem. The bi-objective problem is
/// one-dimensional and rejects other dimensions.
pub fn lookup(name: &str, dimension: usize) -> Result<RegisteredProblem> {
    match name {
        "schaffer" => {
            if dimension != 1 {
                return Err(invalid(format!(
                    "schaffer is one-dimensional (got dimension {dimension})"
                )));
            }
            Ok(RegisteredProblem::Multi(schaffer()))
        }
        _ => benchmark(name, dimension).map(RegisteredProblem::Single),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_examples() {
        assert_eq!(sphere(&[0.0, 0.0]), 0.0);
        assert_eq!(sphere(&[1.0, 1.0]), 2.0);
        assert_eq!(sphere(&[3.0]), 9.0);
    }

    #[test]
    fn rosenbrock_examples() {
        assert_eq!(rosenbrock(&[1.0, 1.0, 1.0]).unwrap(), 0.0);
        assert_eq!(rosenbrock(&[0.0, 0.0]).unwrap(), 1.0);
        assert_eq!(rosenbrock(&[-1.0, 1.0]).unwrap(), 4.0);
        assert!(rosenbrock(&[1.0]).is_err());
    }

    #[test]
    fn rastrigin_examples() {
        assert_eq!(rastrigin(&[0.0, 0.0]), 0.0);
        assert!((rastrigin(&[1.0, 1.0]) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rastrigin_is_non_negative_on_grid() {
        let n = 401;
        for i in 0..n {
            for j in 0..n {
                let x = -5.12 + 10.24 * i as f64 / (n - 1) as f64;
                let y = -5.12 + 10.24 * j as f64 / (n - 1) as f64;
                assert!(rastrigin(&[x, y]) >= 0.0, "({x}, {y})");
            }
        }
    }

    #[test]
    fn ackley_examples() {
        assert!(ackley(&[0.0, 0.0]).abs() < 1e-12);
        // mpmath, 40 digits.
        assert!((ackley(&[1.0, 1.0]) - 3.625_384_938_440_362_826_6).abs() < 1e-12);
    }

    #[test]
    fn schaffer_examples() {
        assert_eq!(schaffer_bi_objective(0.0), (0.0, 4.0));
        assert_eq!(schaffer_bi_objective(2.0), (4.0, 0.0));
        assert_eq!(schaffer_bi_objective(1.0), (1.0, 1.0));
    }

    #[test]
    fn registry_self_checks_and_bounds() {
        for name in SINGLE_OBJECTIVE_NAMES {
            let b = benchmark(name, 10).unwrap();
            assert_eq!(b.spec.dimension, 10);
            let p = b.problem();
            assert!(p.contains(&b.spec.known_optimum_position));
        }
        assert_eq!(benchmark("rastrigin", 3).unwrap().spec.upper, 5.12);
        assert_eq!(benchmark("ackley", 3).unwrap().spec.lower, -32.768);
    }

    #[test]
    fn registry_errors() {
        let err = lookup("nosuch", 3).unwrap_err().to_string();
        assert!(err.contains("nosuch"));
        assert!(lookup("rosenbrock", 1).is_err());
        assert!(lookup("schaffer", 2).is_err());
        assert!(matches!(lookup("schaffer", 1), Ok(RegisteredProblem::Multi(_))));
        assert!(lookup("sphere", 0).is_err());
    }
}
