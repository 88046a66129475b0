//! Scenario replay and Monte Carlo runs.
//!
//! A run starts from the scenario's initial occupants, seats each arriving
//! group with the chosen policy and records the entropy after every step.
//! Step 0 is the initial configuration.

use rayon::prelude::*;
use thiserror::Error;

use crate::entropy::{entropy, EntropyScore};
use crate::grid::{Auditorium, GridError, SeatCoord};
use crate::policy::{select_placement, Policy, PolicyError, RandomSource};
use crate::stats::{MeanTrajectoryOf, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("initial seat {0} is listed twice")]
    DuplicateInitial(SeatCoord),
    #[error("arrival {step} has group size 0")]
    ZeroGroup { step: usize },
    #[error("observed step {found} out of order, expected step {expected}")]
    ObservedStepOrder { expected: usize, found: usize },
    #[error("observed step {step} seats {found} participants but arrival {step} is a group of {expected}")]
    ObservedSizeMismatch {
        step: usize,
        expected: usize,
        found: usize,
    },
    #[error("observed step {step} reuses seat {seat}")]
    ObservedConflict { step: usize, seat: SeatCoord },
    #[error("observed data covers {found} steps but there are {expected} arrivals")]
    ObservedLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulationError {
    #[error("{source} at step {step}")]
    Placement {
        step: usize,
        #[source]
        source: PolicyError,
    },
    #[error("run {run}: {source}")]
    Run {
        run: usize,
        #[source]
        source: Box<SimulationError>,
    },
    #[error("scenario has no observed placements")]
    MissingObservedData,
    #[error("at least one run is required")]
    ZeroRuns,
    #[error(transparent)]
    Grid(#[from] GridError),
}

impl SimulationError {
    /// Arrival step that could not be seated, if that is what failed.
    pub fn failing_step(&self) -> Option<usize> {
        match self {
            SimulationError::Placement { step, .. } => Some(*step),
            SimulationError::Run { source, .. } => source.failing_step(),
            _ => None,
        }
    }
}

/// Seats taken by one observed arrival.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservedStep {
    pub step: usize,
    pub seats: Vec<SeatCoord>,
}

/// Auditorium size, initial occupants, arrival schedule and optional
/// recorded real placements. Constructed only through [`Scenario::new`],
/// which enforces consistency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    rows: usize,
    cols: usize,
    initial: Vec<SeatCoord>,
    arrivals: Vec<usize>,
    observed: Option<Vec<ObservedStep>>,
}

impl Scenario {
    pub fn new(
        rows: usize,
        cols: usize,
        initial: Vec<SeatCoord>,
        arrivals: Vec<usize>,
        observed: Option<Vec<ObservedStep>>,
    ) -> Result<Self, ScenarioError> {
        let mut aud = Auditorium::empty(rows, cols)?;
        for &c in &initial {
            match aud.set_occupied(c) {
                Err(GridError::SeatConflict(c)) => return Err(ScenarioError::DuplicateInitial(c)),
                other => other?,
            }
        }
        if let Some(step) = arrivals.iter().position(|&g| g == 0) {
            return Err(ScenarioError::ZeroGroup { step: step + 1 });
        }
        if let Some(obs) = &observed {
            if obs.len() != arrivals.len() {
                return Err(ScenarioError::ObservedLength {
                    expected: arrivals.len(),
                    found: obs.len(),
                });
            }
            for (i, (o, &size)) in obs.iter().zip(&arrivals).enumerate() {
                if o.step != i + 1 {
                    return Err(ScenarioError::ObservedStepOrder {
                        expected: i + 1,
                        found: o.step,
                    });
                }
                if o.seats.len() != size {
                    return Err(ScenarioError::ObservedSizeMismatch {
                        step: o.step,
                        expected: size,
                        found: o.seats.len(),
                    });
                }
                for &seat in &o.seats {
                    match aud.set_occupied(seat) {
                        Err(GridError::SeatConflict(seat)) => {
                            return Err(ScenarioError::ObservedConflict { step: o.step, seat })
                        }
                        other => other?,
                    }
                }
            }
        }
        let mut initial = initial;
        initial.sort();
        Ok(Self {
            rows,
            cols,
            initial,
            arrivals,
            observed,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Initial occupants in row-major order.
    pub fn initial(&self) -> &[SeatCoord] {
        &self.initial
    }

    pub fn arrivals(&self) -> &[usize] {
        &self.arrivals
    }

    pub fn observed(&self) -> Option<&[ObservedStep]> {
        self.observed.as_deref()
    }

    pub fn initial_auditorium(&self) -> Auditorium {
        Auditorium::with_occupants(self.rows, self.cols, self.initial.iter().copied())
            .expect("validated on construction")
    }

    /// Left-right mirror image of the whole scenario.
    pub fn mirrored(&self) -> Self {
        let flip = |c: &SeatCoord| SeatCoord::new(c.row, self.cols + 1 - c.seat);
        let observed = self.observed.as_ref().map(|obs| {
            obs.iter()
                .map(|o| ObservedStep {
                    step: o.step,
                    seats: o.seats.iter().map(flip).collect(),
                })
                .collect()
        });
        Self::new(
            self.rows,
            self.cols,
            self.initial.iter().map(flip).collect(),
            self.arrivals.clone(),
            observed,
        )
        .expect("mirroring preserves validity")
    }

    /// Same scenario without the observed block.
    pub fn without_observed(&self) -> Self {
        Self {
            observed: None,
            ..self.clone()
        }
    }

    /// Auditorium after every observed placement, if any.
    pub fn final_observed_auditorium(&self) -> Option<Auditorium> {
        let mut aud = self.initial_auditorium();
        for o in self.observed()? {
            for &s in &o.seats {
                aud.set_occupied(s).expect("validated on construction");
            }
        }
        Some(aud)
    }
}

/// Entropy after each step; index 0 is the initial configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trajectory(Vec<EntropyScore>);

impl Trajectory {
    pub fn new(scores: Vec<EntropyScore>) -> Self {
        Self(scores)
    }

    pub fn from_values(values: Vec<u64>) -> Self {
        Self(values.into_iter().map(EntropyScore).collect())
    }

    pub fn scores(&self) -> &[EntropyScore] {
        &self.0
    }

    pub fn value_at(&self, step: usize) -> u64 {
        self.0[step].0
    }

    pub fn iter_values(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|e| e.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<EntropyScore> {
        self.0.last().copied()
    }
}

/// Seed for run `index` under `master`: the `(index + 1)`-th output of a
/// SplitMix64 generator started at `master`. The map is a bijection in
/// `index` for a fixed master seed, so runs never share a stream.
pub fn split_seed(master: u64, index: u64) -> u64 {
    const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut z = master.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs the arrival schedule once and returns the final auditorium along
/// with the trajectory.
pub fn run_once_with_final(
    scenario: &Scenario,
    policy: Policy,
    seed: u64,
) -> Result<(Trajectory, Auditorium), SimulationError> {
    let mut rng = RandomSource::from_seed(seed);
    let mut aud = scenario.initial_auditorium();
    let mut scores = Vec::with_capacity(scenario.arrivals().len() + 1);
    scores.push(entropy(&aud));
    for (i, &size) in scenario.arrivals().iter().enumerate() {
        let pl = select_placement(policy, &aud, size, &mut rng)
            .map_err(|source| SimulationError::Placement { step: i + 1, source })?;
        aud.occupy(pl)?;
        scores.push(entropy(&aud));
    }
    Ok((Trajectory(scores), aud))
}

pub fn run_once(scenario: &Scenario, policy: Policy, seed: u64) -> Result<Trajectory, SimulationError> {
    run_once_with_final(scenario, policy, seed).map(|(t, _)| t)
}

/// Every run's trajectory, in run-index order. Runs execute on the current
/// rayon pool; the result does not depend on the number of threads.
pub fn run_trajectories(
    scenario: &Scenario,
    policy: Policy,
    runs: usize,
    master_seed: u64,
) -> Result<Vec<Trajectory>, SimulationError> {
    if runs == 0 {
        return Err(SimulationError::ZeroRuns);
    }
    (0..runs)
        .into_par_iter()
        .map(|i| {
            run_once(scenario, policy, split_seed(master_seed, i as u64)).map_err(|e| {
                SimulationError::Run {
                    run: i,
                    source: Box::new(e),
                }
            })
        })
        .collect()
}

pub fn run_many<T: Scalar>(
    scenario: &Scenario,
    policy: Policy,
    runs: usize,
    master_seed: u64,
) -> Result<MeanTrajectoryOf<T>, SimulationError> {
    let trajectories = run_trajectories(scenario, policy, runs, master_seed)?;
    Ok(MeanTrajectoryOf::aggregate(&trajectories).expect("runs share the schedule length"))
}

/// Entropy trajectory of the recorded real placements.
pub fn replay_observed(scenario: &Scenario) -> Result<Trajectory, SimulationError> {
    let observed = scenario.observed().ok_or(SimulationError::MissingObservedData)?;
    let mut aud = scenario.initial_auditorium();
    let mut scores = Vec::with_capacity(observed.len() + 1);
    scores.push(entropy(&aud));
    for o in observed {
        for &s in &o.seats {
            aud.set_occupied(s)?;
        }
        scores.push(entropy(&aud));
    }
    Ok(Trajectory(scores))
}
