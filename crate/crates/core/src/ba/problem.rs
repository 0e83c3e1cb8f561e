use std::fmt;
use std::sync::Arc;

use crate::error::{check_len, invalid, ObjectiveError, Result};

type ObjectiveFn = dyn Fn(&[f64]) -> std::result::Result<f64, ObjectiveError> + Send + Sync;

/// A box-constrained minimization problem.
///
/// The objective must be deterministic. Maximization is expressed by
/// negating the objective before building the problem.
#[derive(Clone)]
pub struct Problem {
    lower: Vec<f64>,
    upper: Vec<f64>,
    objective: Arc<ObjectiveFn>,
}

impl Problem {
    /// Builds a problem from an infallible objective. A NaN result is
    /// reported as an evaluation failure.
    pub fn new<F>(lower: Vec<f64>, upper: Vec<f64>, objective: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::fallible(lower, upper, move |x| Ok(objective(x)))
    }

    /// Builds a problem from an objective that may fail.
    pub fn fallible<F>(lower: Vec<f64>, upper: Vec<f64>, objective: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> std::result::Result<f64, ObjectiveError> + Send + Sync + 'static,
    {
        validate_bounds(&lower, &upper)?;
        Ok(Self {
            lower,
            upper,
            objective: Arc::new(objective),
        })
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower_bounds(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper_bounds(&self) -> &[f64] {
        &self.upper
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    pub fn evaluate(&self, x: &[f64]) -> std::result::Result<f64, ObjectiveError> {
        let value = (self.objective)(x)?;
        if value.is_nan() {
            return Err(ObjectiveError::NotANumber);
        }
        Ok(value)
    }
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .finish_non_exhaustive()
    }
}

pub(crate) fn validate_bounds(lower: &[f64], upper: &[f64]) -> Result<()> {
    if lower.is_empty() {
        return Err(invalid("problem dimension must be positive"));
    }
    check_len(lower.len(), upper.len())?;
    for (j, (lo, hi)) in lower.iter().zip(upper).enumerate() {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(invalid(format!(
                "bounds of component {j} must be finite with lower < upper (got [{lo}, {hi}])"
            )));
        }
    }
    Ok(())
}
