//! Population state, initialization and the per-iteration step.

use crate::ba::config::{BaConfig, Variant};
use crate::ba::equations::{
    accept_candidate, apply_bounds, local_search_step, loudness_step, pulse_rate_at,
    sample_frequency, update_position, update_velocity,
};
use crate::ba::problem::Problem;
use crate::error::{invalid, BatError, Result};
use crate::rng::RandomStream;
use crate::variants::binary::{binary_update, BinaryBat};
use crate::variants::chaos::{chaos_next, chaotic_beta, ChaosState};
use crate::variants::levy::{levy_step, LevyConfig};

/// One agent of the swarm.
#[derive(Debug, Clone, PartialEq)]
pub struct Bat {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub frequency: f64,
    pub loudness: f64,
    pub pulse_rate: f64,
    pub initial_pulse_rate: f64,
    /// Objective value at `position`.
    pub fitness: f64,
    /// Number of accepted moves so far.
    pub accepted_updates: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState {
    pub bats: Vec<Bat>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub iteration: u64,
    pub evaluations: u64,
}

impl SwarmState {
    pub fn mean_loudness(&self) -> f64 {
        self.bats.iter().map(|b| b.loudness).sum::<f64>() / self.bats.len() as f64
    }

    pub fn mean_pulse_rate(&self) -> f64 {
        self.bats.iter().map(|b| b.pulse_rate).sum::<f64>() / self.bats.len() as f64
    }
}

/// Mutable per-run state of the selected variant.
#[derive(Debug, Clone, PartialEq)]
pub enum VariantHooks {
    Standard,
    Levy { levy: LevyConfig, fraction: f64 },
    Chaotic { chaos: ChaosState },
    Binary,
}

impl VariantHooks {
    pub fn from_config(config: &BaConfig) -> Result<Self> {
        Ok(match config.variant {
            Variant::Standard | Variant::Multiobjective { .. } => VariantHooks::Standard,
            Variant::Levy { levy, fraction } => VariantHooks::Levy { levy, fraction },
            Variant::Chaotic { initial } => VariantHooks::Chaotic {
                chaos: ChaosState::logistic(initial)?,
            },
            Variant::Binary => VariantHooks::Binary,
        })
    }

    fn is_binary(&self) -> bool {
        matches!(self, VariantHooks::Binary)
    }
}

fn evaluate(problem: &Problem, x: &[f64], bat: usize) -> Result<f64> {
    problem
        .evaluate(x)
        .map_err(|source| BatError::Objective { bat, source })
}

fn check_problem(problem: &Problem, config: &BaConfig) -> Result<()> {
    config.validate()?;
    if matches!(config.variant, Variant::Binary) {
        let ok = problem
            .lower_bounds()
            .iter()
            .zip(problem.upper_bounds())
            .all(|(&lo, &hi)| lo <= 0.0 && hi >= 1.0);
        if !ok {
            return Err(invalid("binary variant requires bounds containing both 0 and 1"));
        }
    }
    Ok(())
}

/// Builds the initial population: positions uniform in the box (random bits
/// for the binary variant), zero velocities, frequencies uniform in
/// `[f_min, f_max]`, loudness `A_0` and pulse rate at `t = 0`.
pub fn initialize_swarm(
    problem: &Problem,
    config: &BaConfig,
    rng: &mut RandomStream,
) -> Result<SwarmState> {
    check_problem(problem, config)?;
    let d = problem.dimension();
    let binary = matches!(config.variant, Variant::Binary);
    let pulse0 = pulse_rate_at(config.initial_pulse_rate, config.gamma, 0)?;

    let mut bats = Vec::with_capacity(config.n_bats);
    for i in 0..config.n_bats {
        let position: Vec<f64> = if binary {
            (0..d).map(|_| if rng.uniform() < 0.5 { 1.0 } else { 0.0 }).collect()
        } else {
            problem
                .lower_bounds()
                .iter()
                .zip(problem.upper_bounds())
                .map(|(&lo, &hi)| rng.uniform_in(lo, hi))
                .collect()
        };
        let frequency = sample_frequency(rng.uniform(), config.f_min, config.f_max)?;
        let fitness = evaluate(problem, &position, i)?;
        bats.push(Bat {
            position,
            velocity: vec![0.0; d],
            frequency,
            loudness: config.initial_loudness,
            pulse_rate: pulse0,
            initial_pulse_rate: config.initial_pulse_rate,
            fitness,
            accepted_updates: 0,
        });
    }

    // First minimum wins on ties.
    let best = bats
        .iter()
        .enumerate()
        .fold(0, |best, (i, b)| if b.fitness < bats[best].fitness { i } else { best });
    Ok(SwarmState {
        best_position: bats[best].position.clone(),
        best_fitness: bats[best].fitness,
        iteration: 0,
        evaluations: config.n_bats as u64,
        bats,
    })
}

/// Advances the swarm by one iteration.
///
/// For every bat: draw a frequency, update the velocity, propose a move
/// (position update, Lévy jump or bit resampling), replace it with a local
/// walk around the best solution when a uniform draw exceeds the bat's
/// pulse rate, bound it, evaluate it, and commit it through the loudness
/// gate. Accepted moves decay loudness and refresh the pulse rate. The local
/// walk uses the population-mean loudness at the start of the iteration.
///
/// On error `state` and `hooks` are left untouched.
pub fn step(
    state: &mut SwarmState,
    problem: &Problem,
    config: &BaConfig,
    rng: &mut RandomStream,
    hooks: &mut VariantHooks,
) -> Result<()> {
    let mut next = state.clone();
    let mut next_hooks = hooks.clone();
    advance(&mut next, problem, config, rng, &mut next_hooks)?;
    *state = next;
    *hooks = next_hooks;
    Ok(())
}

fn advance(
    state: &mut SwarmState,
    problem: &Problem,
    config: &BaConfig,
    rng: &mut RandomStream,
    hooks: &mut VariantHooks,
) -> Result<()> {
    let d = problem.dimension();
    let t = state.iteration;
    let mean_loudness = state.mean_loudness();
    let binary = hooks.is_binary();

    for i in 0..state.bats.len() {
        let beta = match hooks {
            VariantHooks::Chaotic { chaos } => {
                let beta = chaotic_beta(chaos);
                *chaos = chaos_next(*chaos)?;
                beta
            }
            _ => rng.uniform(),
        };

        let bat = &state.bats[i];
        let frequency = sample_frequency(beta, config.f_min, config.f_max)?;
        let velocity = update_velocity(
            &bat.velocity,
            &bat.position,
            &state.best_position,
            frequency,
            config.attraction_sign,
        )?;

        let mut candidate = match hooks {
            VariantHooks::Binary => {
                let u: Vec<f64> = (0..d).map(|_| rng.uniform()).collect();
                let moved = binary_update(&BinaryBat::from_position(&bat.position, velocity.clone()), &u)?;
                moved.to_position()
            }
            VariantHooks::Levy { levy, fraction } => {
                if rng.uniform() < *fraction {
                    update_position(&bat.position, &levy_step(levy, d, rng)?)?
                } else {
                    update_position(&bat.position, &velocity)?
                }
            }
            _ => update_position(&bat.position, &velocity)?,
        };

        if rng.uniform() > bat.pulse_rate {
            let epsilon: Vec<f64> = (0..d).map(|_| rng.symmetric()).collect();
            candidate = local_search_step(&state.best_position, mean_loudness, &epsilon)?;
            if binary {
                candidate = BinaryBat::from_position(&candidate, Vec::new()).to_position();
            }
        }
        let candidate = apply_bounds(
            &candidate,
            problem.lower_bounds(),
            problem.upper_bounds(),
            config.bound_mode,
        );
        let fitness = evaluate(problem, &candidate, i)?;
        state.evaluations += 1;

        let u = rng.uniform();
        let bat = &mut state.bats[i];
        bat.frequency = frequency;
        bat.velocity = velocity;
        let improved_best = fitness < state.best_fitness;
        if accept_candidate(fitness, bat.fitness, u, bat.loudness) {
            bat.loudness = loudness_step(bat.loudness, config.alpha)?.max(config.min_loudness);
            bat.pulse_rate = pulse_rate_at(bat.initial_pulse_rate, config.gamma, t)?;
            bat.accepted_updates += 1;
            bat.fitness = fitness;
            bat.position.clone_from(&candidate);
        }
        if improved_best {
            state.best_fitness = fitness;
            state.best_position = candidate;
        }
    }

    state.iteration += 1;
    Ok(())
}
