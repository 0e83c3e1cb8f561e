use serde::{Deserialize, Serialize};

/// Population snapshot taken after initialization and after every step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub iteration: u64,
    pub best_fitness: f64,
    pub mean_loudness: f64,
    pub mean_pulse_rate: f64,
    #[serde(rename = "evaluations")]
    pub evaluations_so_far: u64,
}

/// Per-iteration convergence history of one run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunTrace {
    pub records: Vec<TraceRecord>,
}

/// First violated trace invariant, if any.
#[derive(Debug, Clone, PartialEq)]
pub enum TraceViolation {
    IterationNotIncreasing { index: usize },
    BestFitnessIncreased { index: usize },
    LoudnessIncreased { index: usize },
    PulseRateDecreased { index: usize },
}

impl RunTrace {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> Option<&TraceRecord> {
        self.records.last()
    }

    /// Keeps every `k`-th iteration plus the final record.
    pub fn thinned(&self, k: u64) -> RunTrace {
        let k = k.max(1);
        let last = self.records.len().saturating_sub(1);
        let records = self
            .records
            .iter()
            .enumerate()
            .filter(|(i, r)| r.iteration % k == 0 || *i == last)
            .map(|(_, r)| *r)
            .collect();
        RunTrace { records }
    }

    /// Checks strictly increasing iterations, non-increasing best fitness and
    /// mean loudness, and non-decreasing mean pulse rate.
    pub fn check_invariants(&self) -> Result<(), TraceViolation> {
        for (index, pair) in self.records.windows(2).enumerate() {
            let (a, b) = (&pair[0], &pair[1]);
            let index = index + 1;
            if b.iteration <= a.iteration {
                return Err(TraceViolation::IterationNotIncreasing { index });
            }
            if b.best_fitness > a.best_fitness {
                return Err(TraceViolation::BestFitnessIncreased { index });
            }
            if b.mean_loudness > a.mean_loudness {
                return Err(TraceViolation::LoudnessIncreased { index });
            }
            if b.mean_pulse_rate < a.mean_pulse_rate {
                return Err(TraceViolation::PulseRateDecreased { index });
            }
        }
        Ok(())
    }
}
