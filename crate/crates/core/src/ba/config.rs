use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::variants::levy::LevyConfig;

/// How out-of-box candidates are brought back into the feasible region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum BoundMode {
    #[default]
    Clamp,
    Reflect,
}

/// Direction of the frequency-scaled pull in the velocity update.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum AttractionSign {
    /// `v + (x_i - x_best) * f`.
    #[default]
    Classic,
    /// `v + (x_best - x_i) * f`.
    Reversed,
}

/// Algorithm variant selected for a run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Standard,
    /// A fraction of bats replace the position update by a Lévy step.
    Levy { levy: LevyConfig, fraction: f64 },
    /// The uniform frequency draw is replaced by a logistic-map orbit.
    Chaotic { initial: f64 },
    /// Positions are bit vectors driven through a sigmoid transfer function.
    Binary,
    /// Weighted-sum scalarization over a simplex lattice of weights.
    Multiobjective { divisions: usize },
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Levy { .. } => "levy",
            Variant::Chaotic { .. } => "chaotic",
            Variant::Binary => "binary",
            Variant::Multiobjective { .. } => "multiobjective",
        }
    }

    pub fn levy_default() -> Self {
        Variant::Levy {
            levy: LevyConfig::default(),
            fraction: 0.1,
        }
    }

    pub fn chaotic_default() -> Self {
        Variant::Chaotic { initial: 0.7 }
    }

    pub fn multiobjective_default() -> Self {
        Variant::Multiobjective { divisions: 10 }
    }
}

/// Algorithm-dependent parameters of a bat algorithm run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BaConfig {
    pub n_bats: usize,
    pub f_min: f64,
    pub f_max: f64,
    /// Loudness decay factor applied on every accepted move.
    pub alpha: f64,
    /// Pulse-rate growth constant.
    pub gamma: f64,
    pub initial_loudness: f64,
    /// Floor under which loudness never decays.
    pub min_loudness: f64,
    pub initial_pulse_rate: f64,
    /// Iteration budget; zero runs initialization only.
    pub max_iterations: usize,
    /// Stop as soon as the best fitness reaches this value.
    pub target_fitness: Option<f64>,
    pub seed: u64,
    pub bound_mode: BoundMode,
    pub attraction_sign: AttractionSign,
    pub variant: Variant,
}

impl Default for BaConfig {
    fn default() -> Self {
        Self {
            n_bats: 25,
            f_min: 0.0,
            f_max: 2.0,
            alpha: 0.9,
            gamma: 0.9,
            initial_loudness: 0.5,
            min_loudness: 0.0,
            initial_pulse_rate: 0.5,
            max_iterations: 1000,
            target_fitness: None,
            seed: 0,
            bound_mode: BoundMode::Clamp,
            attraction_sign: AttractionSign::Classic,
            variant: Variant::Standard,
        }
    }
}

impl BaConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_bats == 0 {
            return Err(invalid("n_bats must be positive"));
        }
        if !(self.f_min.is_finite() && self.f_max.is_finite() && self.f_min <= self.f_max) {
            return Err(invalid(format!(
                "frequency range must satisfy f_min <= f_max (got {} > {})",
                self.f_min, self.f_max
            )));
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(invalid(format!("alpha must be in (0, 1] (got {})", self.alpha)));
        }
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return Err(invalid(format!("gamma must be positive (got {})", self.gamma)));
        }
        if !(self.initial_loudness > 0.0 && self.initial_loudness.is_finite()) {
            return Err(invalid(format!(
                "initial loudness must be positive (got {})",
                self.initial_loudness
            )));
        }
        if !(self.min_loudness >= 0.0 && self.min_loudness <= self.initial_loudness) {
            return Err(invalid(format!(
                "min loudness must lie in [0, initial loudness] (got {})",
                self.min_loudness
            )));
        }
        if !(0.0..=1.0).contains(&self.initial_pulse_rate) {
            return Err(invalid(format!(
                "initial pulse rate must be in [0, 1] (got {})",
                self.initial_pulse_rate
            )));
        }
        if matches!(self.target_fitness, Some(t) if t.is_nan()) {
            return Err(invalid("target fitness must not be NaN"));
        }
        match self.variant {
            Variant::Levy { levy, fraction } => {
                levy.validate()?;
                if !(0.0..=1.0).contains(&fraction) {
                    return Err(invalid(format!(
                        "levy fraction must be in [0, 1] (got {fraction})"
                    )));
                }
            }
            Variant::Chaotic { initial } => {
                if !(0.0..=1.0).contains(&initial) {
                    return Err(invalid(format!(
                        "chaotic initial value must be in [0, 1] (got {initial})"
                    )));
                }
            }
            Variant::Multiobjective { divisions } => {
                if divisions == 0 {
                    return Err(invalid("weight lattice divisions must be positive"));
                }
            }
            Variant::Standard | Variant::Binary => {}
        }
        Ok(())
    }
}
