use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ChaosMap {
    /// `x -> 4 x (1 - x)`
    #[default]
    Logistic,
}

/// Current point of a chaotic orbit on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChaosState {
    pub value: f64,
    pub map_kind: ChaosMap,
}

impl ChaosState {
    pub fn logistic(value: f64) -> Result<Self> {
        check_unit(value)?;
        Ok(Self {
            value,
            map_kind: ChaosMap::Logistic,
        })
    }
}

fn check_unit(value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(invalid(format!("chaos value must be in [0, 1] (got {value})")))
    }
}

pub fn chaos_next(state: ChaosState) -> Result<ChaosState> {
    check_unit(state.value)?;
    let value = match state.map_kind {
        ChaosMap::Logistic => 4.0 * state.value * (1.0 - state.value),
    };
    Ok(ChaosState { value, ..state })
}

/// The chaotic value that stands in for the uniform frequency draw. The
/// caller advances the state with [`chaos_next`].
pub fn chaotic_beta(state: &ChaosState) -> f64 {
    state.value
}
