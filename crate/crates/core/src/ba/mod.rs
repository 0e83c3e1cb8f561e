//! The standard bat algorithm.

pub mod config;
pub mod engine;
pub mod equations;
pub mod problem;
pub mod swarm;
pub mod trace;

pub use config::{AttractionSign, BaConfig, BoundMode, Variant};
pub use engine::{run, Engine};
pub use equations::{
    accept_candidate, apply_bounds, local_search_step, loudness_step, pulse_rate_at,
    sample_frequency, update_position, update_velocity,
};
pub use problem::Problem;
pub use swarm::{initialize_swarm, step, Bat, SwarmState, VariantHooks};
pub use trace::{RunTrace, TraceRecord, TraceViolation};
