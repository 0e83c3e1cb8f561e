use crate::ba::problem::Problem;
use crate::error::{invalid, BatError, Result};
use crate::rng::RandomStream;

/// Pure random search: `evaluations` uniform samples in the box, returning
/// the best objective value seen. Used as a reference point for the
/// optimizer under an equal evaluation budget.
pub fn random_search(problem: &Problem, evaluations: u64, rng: &mut RandomStream) -> Result<f64> {
    if evaluations == 0 {
        return Err(invalid("random search needs at least one evaluation"));
    }
    let mut best = f64::INFINITY;
    let mut x = vec![0.0; problem.dimension()];
    for k in 0..evaluations {
        for (xj, (&lo, &hi)) in x
            .iter_mut()
            .zip(problem.lower_bounds().iter().zip(problem.upper_bounds()))
        {
            *xj = rng.uniform_in(lo, hi);
        }
        let value = problem
            .evaluate(&x)
            .map_err(|source| BatError::Objective { bat: k as usize, source })?;
        best = best.min(value);
    }
    Ok(best)
}
