//! Heavy-tailed Lévy steps generated with Mantegna's algorithm.
//!
//! A step component is `u / |v|^(1/beta)` with `u ~ N(0, sigma_u^2)` and
//! `v ~ N(0, 1)`. Mantegna's normalizer degenerates at `beta = 2`, where the
//! stable law is Gaussian, so that exponent draws plain normal steps.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{invalid, Result};
use crate::rng::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevyConfig {
    /// Stability exponent in `(1, 2]`.
    pub stability_exponent: f64,
    /// Multiplier applied to every step component.
    pub scale: f64,
}

impl Default for LevyConfig {
    fn default() -> Self {
        Self {
            stability_exponent: 1.5,
            scale: 0.1,
        }
    }
}

impl LevyConfig {
    pub fn validate(&self) -> Result<()> {
        let beta = self.stability_exponent;
        if !(beta > 1.0 && beta <= 2.0) {
            return Err(invalid(format!(
                "Lévy stability exponent must be in (1, 2] (got {beta})"
            )));
        }
        if !(self.scale >= 0.0 && self.scale.is_finite()) {
            return Err(invalid(format!(
                "Lévy scale must be finite and non-negative (got {})",
                self.scale
            )));
        }
        Ok(())
    }
}

/// Mantegna's `sigma_u` for stability exponent `beta`:
///
/// `[Γ(1+β) sin(πβ/2) / (Γ((1+β)/2) β 2^((β-1)/2))]^(1/β)`
pub fn mantegna_sigma(beta: f64) -> f64 {
    let num = gamma(1.0 + beta) * (std::f64::consts::PI * beta / 2.0).sin();
    let den = gamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
    (num / den).powf(1.0 / beta)
}

/// Draws a `dimension`-vector of Lévy-distributed steps scaled by
/// `config.scale`.
pub fn levy_step(config: &LevyConfig, dimension: usize, rng: &mut RandomStream) -> Result<Vec<f64>> {
    config.validate()?;
    let beta = config.stability_exponent;
    if beta == 2.0 {
        return Ok((0..dimension).map(|_| config.scale * rng.normal()).collect());
    }
    let sigma = mantegna_sigma(beta);
    let step = (0..dimension)
        .map(|_| {
            let u = sigma * rng.normal();
            let v = rng.normal();
            config.scale * u / v.abs().powf(1.0 / beta)
        })
        .collect();
    Ok(step)
}
