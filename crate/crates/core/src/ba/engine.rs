use crate::ba::config::BaConfig;
use crate::ba::problem::Problem;
use crate::ba::swarm::{initialize_swarm, step, SwarmState, VariantHooks};
use crate::ba::trace::{RunTrace, TraceRecord};
use crate::error::Result;
use crate::rng::RandomStream;

/// A single run: owns the swarm, its random stream and variant state.
#[derive(Debug)]
pub struct Engine<'p> {
    problem: &'p Problem,
    config: BaConfig,
    rng: RandomStream,
    hooks: VariantHooks,
    state: SwarmState,
}

impl<'p> Engine<'p> {
    /// Initializes a run seeded directly from `config.seed`.
    pub fn new(problem: &'p Problem, config: BaConfig) -> Result<Self> {
        Self::with_stream(problem, config, RandomStream::from_seed(config.seed))
    }

    pub fn with_stream(problem: &'p Problem, config: BaConfig, mut rng: RandomStream) -> Result<Self> {
        config.validate()?;
        let hooks = VariantHooks::from_config(&config)?;
        let state = initialize_swarm(problem, &config, &mut rng)?;
        Ok(Self {
            problem,
            config,
            rng,
            hooks,
            state,
        })
    }

    pub fn state(&self) -> &SwarmState {
        &self.state
    }

    pub fn config(&self) -> &BaConfig {
        &self.config
    }

    pub fn record(&self) -> TraceRecord {
        TraceRecord {
            iteration: self.state.iteration,
            best_fitness: self.state.best_fitness,
            mean_loudness: self.state.mean_loudness(),
            mean_pulse_rate: self.state.mean_pulse_rate(),
            evaluations_so_far: self.state.evaluations,
        }
    }

    /// True once the iteration budget is spent or the target is reached.
    pub fn is_done(&self) -> bool {
        self.state.iteration >= self.config.max_iterations as u64
            || self
                .config
                .target_fitness
                .is_some_and(|target| self.state.best_fitness <= target)
    }

    pub fn step(&mut self) -> Result<()> {
        step(
            &mut self.state,
            self.problem,
            &self.config,
            &mut self.rng,
            &mut self.hooks,
        )
    }

    /// Steps until done, recording one trace entry per iteration including
    /// the initial population.
    pub fn run(mut self) -> Result<(SwarmState, RunTrace)> {
        let mut trace = RunTrace {
            records: vec![self.record()],
        };
        while !self.is_done() {
            self.step()?;
            trace.records.push(self.record());
        }
        Ok((self.state, trace))
    }
}

/// Runs the algorithm to completion with the stream seeded from
/// `config.seed`.
pub fn run(problem: &Problem, config: &BaConfig) -> Result<(SwarmState, RunTrace)> {
    Engine::new(problem, *config)?.run()
}
