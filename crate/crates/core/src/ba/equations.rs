//! Per-bat update rules: frequency tuning, velocity and position moves,
//! the loudness and pulse-rate schedules, the local walk around the best
//! solution, the acceptance test and boundary handling.

use crate::ba::config::{AttractionSign, BoundMode};
use crate::error::{check_len, invalid, Result};

/// `f = f_min + (f_max - f_min) * beta`.
pub fn sample_frequency(beta: f64, f_min: f64, f_max: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(invalid(format!("beta must be in [0, 1] (got {beta})")));
    }
    if !(f_min <= f_max) {
        return Err(invalid(format!(
            "frequency bounds inverted: f_min = {f_min}, f_max = {f_max}"
        )));
    }
    Ok(f_min + (f_max - f_min) * beta)
}

/// New velocity from the previous velocity, the previous position and the
/// current best position, scaled by frequency `f`.
pub fn update_velocity(
    v_prev: &[f64],
    x_prev: &[f64],
    x_best: &[f64],
    f: f64,
    sign: AttractionSign,
) -> Result<Vec<f64>> {
    check_len(v_prev.len(), x_prev.len())?;
    check_len(v_prev.len(), x_best.len())?;
    let v = v_prev
        .iter()
        .zip(x_prev.iter().zip(x_best))
        .map(|(&v, (&x, &b))| match sign {
            AttractionSign::Classic => v + (x - b) * f,
            AttractionSign::Reversed => v + (b - x) * f,
        })
        .collect();
    Ok(v)
}

/// `x + v`, before any boundary handling.
pub fn update_position(x_prev: &[f64], v: &[f64]) -> Result<Vec<f64>> {
    check_len(x_prev.len(), v.len())?;
    Ok(x_prev.iter().zip(v).map(|(&x, &v)| x + v).collect())
}

/// One geometric loudness decay, `alpha * A`.
pub fn loudness_step(loudness: f64, alpha: f64) -> Result<f64> {
    if !(loudness >= 0.0) {
        return Err(invalid(format!("loudness must be non-negative (got {loudness})")));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid(format!("alpha must be in (0, 1] (got {alpha})")));
    }
    Ok(alpha * loudness)
}

/// Pulse emission rate at iteration `t`: `r0 * (1 - exp(-gamma * t))`.
///
/// Starts at zero and rises monotonically toward `r0`.
pub fn pulse_rate_at(r0: f64, gamma: f64, t: u64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r0) {
        return Err(invalid(format!("initial pulse rate must be in [0, 1] (got {r0})")));
    }
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(invalid(format!("gamma must be positive (got {gamma})")));
    }
    Ok(r0 * (1.0 - (-gamma * t as f64).exp()))
}

/// Local walk around the best solution: `x_best + epsilon * mean_loudness`.
///
/// The step contracts as the population's loudness decays.
pub fn local_search_step(x_best: &[f64], mean_loudness: f64, epsilon: &[f64]) -> Result<Vec<f64>> {
    check_len(x_best.len(), epsilon.len())?;
    if !(mean_loudness >= 0.0) {
        return Err(invalid(format!(
            "mean loudness must be non-negative (got {mean_loudness})"
        )));
    }
    if let Some(e) = epsilon.iter().find(|e| !(-1.0..=1.0).contains(*e)) {
        return Err(invalid(format!("epsilon entries must be in [-1, 1] (got {e})")));
    }
    Ok(x_best
        .iter()
        .zip(epsilon)
        .map(|(&b, &e)| b + e * mean_loudness)
        .collect())
}

/// A candidate is accepted when the loudness gate fires (`u < loudness`)
/// and it is no worse than the bat's current fitness.
pub fn accept_candidate(candidate_fitness: f64, current_fitness: f64, u: f64, loudness: f64) -> bool {
    u < loudness && candidate_fitness <= current_fitness
}

/// Brings `x` back into `[lower, upper]`.
pub fn apply_bounds(x: &[f64], lower: &[f64], upper: &[f64], mode: BoundMode) -> Vec<f64> {
    x.iter()
        .zip(lower.iter().zip(upper))
        .map(|(&v, (&lo, &hi))| match mode {
            BoundMode::Clamp => clamp(v, lo, hi),
            BoundMode::Reflect => reflect(v, lo, hi),
        })
        .collect()
}

fn clamp(v: f64, lo: f64, hi: f64) -> f64 {
    if v.is_nan() {
        lo
    } else {
        v.clamp(lo, hi)
    }
}

// Folds with period 2 * width so arbitrarily large overshoots land inside.
fn reflect(v: f64, lo: f64, hi: f64) -> f64 {
    if !v.is_finite() {
        return clamp(v, lo, hi);
    }
    if (lo..=hi).contains(&v) {
        return v;
    }
    let width = hi - lo;
    let mut y = (v - lo).rem_euclid(2.0 * width);
    if y > width {
        y = 2.0 * width - y;
    }
    (lo + y).clamp(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::BatError;

    #[test]
    fn frequency_endpoints_and_midpoint() {
        assert_eq!(sample_frequency(0.0, 0.0, 2.0).unwrap(), 0.0);
        assert_eq!(sample_frequency(1.0, 0.0, 2.0).unwrap(), 2.0);
        assert_eq!(sample_frequency(0.5, 0.0, 2.0).unwrap(), 1.0);
    }

    #[test]
    fn frequency_rejects_bad_input() {
        assert!(sample_frequency(1.5, 0.0, 2.0).is_err());
        assert!(sample_frequency(-0.1, 0.0, 2.0).is_err());
        assert!(sample_frequency(0.5, 2.0, 0.0).is_err());
        assert!(sample_frequency(f64::NAN, 0.0, 2.0).is_err());
    }

    #[test]
    fn velocity_examples() {
        let v = update_velocity(&[0.3, -1.0], &[2.0, 2.0], &[2.0, 2.0], 1.7, AttractionSign::Classic);
        assert_eq!(v.unwrap(), vec![0.3, -1.0]);
        let v = update_velocity(&[0.0], &[1.0], &[0.0], 0.5, AttractionSign::Classic).unwrap();
        assert_eq!(v, vec![0.5]);
        let v = update_velocity(&[0.0], &[1.0], &[0.0], 0.5, AttractionSign::Reversed).unwrap();
        assert_eq!(v, vec![-0.5]);
        let v = update_velocity(&[4.0], &[1.0], &[-3.0], 0.0, AttractionSign::Classic).unwrap();
        assert_eq!(v, vec![4.0]);
    }

    #[test]
    fn velocity_dimension_mismatch() {
        let err = update_velocity(&[0.0], &[1.0, 2.0], &[0.0], 1.0, AttractionSign::Classic);
        assert!(matches!(err, Err(BatError::DimensionMismatch { .. })));
    }

    #[test]
    fn position_examples() {
        assert_eq!(update_position(&[1.0], &[0.5]).unwrap(), vec![1.5]);
        assert_eq!(update_position(&[1.0, 2.0], &[0.0, 0.0]).unwrap(), vec![1.0, 2.0]);
        assert_eq!(update_position(&[-1.0, 2.0], &[1.0, -2.0]).unwrap(), vec![0.0, 0.0]);
        assert!(update_position(&[1.0], &[]).is_err());
    }

    #[test]
    fn loudness_examples() {
        assert_eq!(loudness_step(1.0, 0.9).unwrap(), 0.9);
        assert_eq!(loudness_step(0.37, 1.0).unwrap(), 0.37);
        let mut a = 2.0;
        for _ in 0..5 {
            a = loudness_step(a, 0.5).unwrap();
        }
        assert_eq!(a, 2.0 * 0.5f64.powi(5));
        assert!(loudness_step(-1.0, 0.9).is_err());
        assert!(loudness_step(1.0, 0.0).is_err());
        assert!(loudness_step(1.0, 1.01).is_err());
    }

    #[test]
    fn pulse_rate_examples() {
        assert_eq!(pulse_rate_at(0.5, 0.9, 0).unwrap(), 0.0);
        // 0.5 * (1 - e^-0.9), evaluated to 40 digits with mpmath.
        let expected = 0.296_715_170_129_700_444_058_272_880_177_187;
        assert!((pulse_rate_at(0.5, 0.9, 1).unwrap() - expected).abs() < 1e-15);
        assert!((pulse_rate_at(0.5, 0.9, 10_000).unwrap() - 0.5).abs() < 1e-15);
        assert!(pulse_rate_at(1.2, 0.9, 1).is_err());
        assert!(pulse_rate_at(0.5, 0.0, 1).is_err());
    }

    #[test]
    fn local_search_examples() {
        assert_eq!(local_search_step(&[1.0, 2.0], 0.0, &[0.7, -0.2]).unwrap(), vec![1.0, 2.0]);
        assert_eq!(local_search_step(&[1.0, 2.0], 0.8, &[0.0, 0.0]).unwrap(), vec![1.0, 2.0]);
        assert_eq!(local_search_step(&[1.0, 1.0], 0.5, &[1.0, -1.0]).unwrap(), vec![1.5, 0.5]);
        assert!(local_search_step(&[1.0], 0.5, &[1.0, 0.0]).is_err());
        assert!(local_search_step(&[1.0], 0.5, &[1.5]).is_err());
    }

    #[test]
    fn acceptance_examples() {
        assert!(!accept_candidate(2.0, 1.0, 0.0, 1.0));
        assert!(!accept_candidate(0.5, 1.0, 0.5, 0.3));
        assert!(accept_candidate(0.5, 1.0, 0.1, 0.9));
        assert!(accept_candidate(1.0, 1.0, 0.1, 0.9));
        assert!(!accept_candidate(0.5, 1.0, 0.1, 0.0));
    }

    #[test]
    fn bounds_examples() {
        let lo = [0.0];
        let hi = [2.0];
        assert_eq!(apply_bounds(&[1.2], &lo, &hi, BoundMode::Clamp), vec![1.2]);
        assert_eq!(apply_bounds(&[1.2], &lo, &hi, BoundMode::Reflect), vec![1.2]);
        assert_eq!(apply_bounds(&[3.0], &lo, &hi, BoundMode::Clamp), vec![2.0]);
        assert_eq!(apply_bounds(&[3.0], &lo, &hi, BoundMode::Reflect), vec![1.0]);
        assert_eq!(apply_bounds(&[-0.5], &lo, &hi, BoundMode::Reflect), vec![0.5]);
        assert_eq!(apply_bounds(&[7.0], &lo, &hi, BoundMode::Reflect), vec![1.0]);
        assert_eq!(apply_bounds(&[f64::INFINITY], &lo, &hi, BoundMode::Reflect), vec![2.0]);
    }
}
