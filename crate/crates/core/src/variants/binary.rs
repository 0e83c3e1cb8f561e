use crate::error::{check_len, Result};

/// A bat in a binary search space. Velocities stay real-valued and are
/// mapped to bit probabilities through [`transfer_probability`].
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryBat {
    pub bits: Vec<bool>,
    pub velocity: Vec<f64>,
}

impl BinaryBat {
    /// Reads bits off a real position, treating values `>= 0.5` as set.
    pub fn from_position(position: &[f64], velocity: Vec<f64>) -> Self {
        Self {
            bits: position.iter().map(|&x| x >= 0.5).collect(),
            velocity,
        }
    }

    pub fn to_position(&self) -> Vec<f64> {
        self.bits.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()
    }
}

/// Logistic sigmoid `1 / (1 + exp(-v))`.
pub fn transfer_probability(v: f64) -> f64 {
    1.0 / (1.0 + (-v).exp())
}

/// Sets bit `j` iff `u[j] < transfer_probability(velocity[j])`.
pub fn binary_update(bat: &BinaryBat, u: &[f64]) -> Result<BinaryBat> {
    check_len(bat.velocity.len(), u.len())?;
    check_len(bat.velocity.len(), bat.bits.len())?;
    let bits = bat
        .velocity
        .iter()
        .zip(u)
        .map(|(&v, &u)| u < transfer_probability(v))
        .collect();
    Ok(BinaryBat {
        bits,
        velocity: bat.velocity.clone(),
    })
}
