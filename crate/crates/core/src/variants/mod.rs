//! Variant mechanisms layered on the standard algorithm: Lévy-flight moves,
//! chaotic frequency sequences, binary encoding and weighted-sum
//! multiobjective handling.

pub mod binary;
pub mod chaos;
pub mod levy;
pub mod multiobjective;

pub use binary::{binary_update, transfer_probability, BinaryBat};
pub use chaos::{chaos_next, chaotic_beta, ChaosMap, ChaosState};
pub use levy::{levy_step, mantegna_sigma, LevyConfig};
pub use multiobjective::{
    pareto_filter, pareto_indices, scalarize, weight_lattice, MultiProblem, ScalarizationWeights,
};
