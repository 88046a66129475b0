//! Seat-selection policies.
//!
//! Every policy narrows the feasible placements for an arriving group to a
//! candidate list (kept in row-major order) and then draws one entry
//! uniformly with [`RandomSource::next_index`].

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::grid::{
    center_of_mass, feasible_placements, min_distance_to_seated, placement_min_distance_to,
    Auditorium, Distance, Placement,
};

/// Inclusive distance band preferred by [`Policy::Space`].
pub const SPACE_BAND: (usize, usize) = (2, 4);
/// [`Policy::Simple`] keeps groups strictly farther than this.
pub const SIMPLE_EXCLUSIVE_MIN: usize = 2;
/// [`Policy::Center`] only considers placements at least this far from others.
pub const CENTER_MIN_DISTANCE: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolicyError {
    #[error("no feasible placement for a group of {size}")]
    NoFeasiblePlacement { size: usize },
    #[error("unknown policy `{0}` (expected random, max, space, simple or center)")]
    UnknownPolicy(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Policy {
    /// Any compact run of empty seats.
    Random,
    /// Maximize the minimum distance to seated participants.
    Max,
    /// Prefer a minimum distance within [`SPACE_BAND`], then the nearest
    /// distance beyond it, then anything.
    Space,
    /// Keep a minimum distance above [`SIMPLE_EXCLUSIVE_MIN`], else anything.
    Simple,
    /// Among placements at least [`CENTER_MIN_DISTANCE`] away from others,
    /// the ones closest to the center of mass; else anything.
    Center,
}

impl Policy {
    pub const ALL: [Policy; 5] = [
        Policy::Random,
        Policy::Max,
        Policy::Space,
        Policy::Simple,
        Policy::Center,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Policy::Random => "random",
            Policy::Max => "max",
            Policy::Space => "space",
            Policy::Simple => "simple",
            Policy::Center => "center",
        }
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for Policy {
    type Err = PolicyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Policy::ALL
            .into_iter()
            .find(|p| p.keyword() == s)
            .ok_or_else(|| PolicyError::UnknownPolicy(s.to_string()))
    }
}

/// Seeded pseudo-random stream (ChaCha8). The same seed always yields the
/// same sequence of choices.
#[derive(Debug, Clone)]
pub struct RandomSource(ChaCha8Rng);

impl RandomSource {
    pub fn from_seed(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform index in `0..len`. `len` must be positive.
    pub fn next_index(&mut self, len: usize) -> usize {
        self.0.gen_range(0..len)
    }
}

fn with_distances(aud: &Auditorium, size: usize) -> Vec<(Placement, Distance)> {
    feasible_placements(aud, size)
        .into_iter()
        .map(|pl| (pl, min_distance_to_seated(aud, pl)))
        .collect()
}

fn placements(scored: &[(Placement, Distance)]) -> Vec<Placement> {
    scored.iter().map(|&(pl, _)| pl).collect()
}

/// Entries whose key equals the minimum key, original order kept.
fn argmin_by<T: Copy, K: Ord>(items: &[T], key: impl Fn(&T) -> K) -> Vec<T> {
    let Some(best) = items.iter().map(&key).min() else {
        return Vec::new();
    };
    items.iter().filter(|it| key(it) == best).copied().collect()
}

/// The placements `policy` chooses among (uniformly) for a group of `size`.
/// Empty exactly when no feasible placement exists.
pub fn candidates(policy: Policy, aud: &Auditorium, size: usize) -> Vec<Placement> {
    match policy {
        Policy::Random => feasible_placements(aud, size),
        Policy::Max => {
            let scored = with_distances(aud, size);
            let Some(best) = scored.iter().map(|&(_, d)| d).max() else {
                return Vec::new();
            };
            scored
                .into_iter()
                .filter(|&(_, d)| d == best)
                .map(|(pl, _)| pl)
                .collect()
        }
        Policy::Space => {
            let scored = with_distances(aud, size);
            let (lo, hi) = SPACE_BAND;
            let band: Vec<_> = scored
                .iter()
                .filter(|(_, d)| d.is_within(lo, hi))
                .map(|&(pl, _)| pl)
                .collect();
            if !band.is_empty() {
                return band;
            }
            let beyond: Vec<_> = scored
                .iter()
                .copied()
                .filter(|(_, d)| d.is_at_least(hi + 1))
                .collect();
            if !beyond.is_empty() {
                return argmin_by(&beyond, |&(_, d)| d)
                    .into_iter()
                    .map(|(pl, _)| pl)
                    .collect();
            }
            placements(&scored)
        }
        Policy::Simple => {
            let scored = with_distances(aud, size);
            let roomy: Vec<_> = scored
                .iter()
                .filter(|(_, d)| d.is_at_least(SIMPLE_EXCLUSIVE_MIN + 1))
                .map(|&(pl, _)| pl)
                .collect();
            if roomy.is_empty() {
                placements(&scored)
            } else {
                roomy
            }
        }
        Policy::Center => {
            let scored = with_distances(aud, size);
            let spaced: Vec<_> = scored
                .iter()
                .filter(|(_, d)| d.is_at_least(CENTER_MIN_DISTANCE))
                .map(|&(pl, _)| pl)
                .collect();
            if spaced.is_empty() {
                return placements(&scored);
            }
            match center_of_mass(aud) {
                Some(c) => argmin_by(&spaced, |&pl| placement_min_distance_to(pl, c)),
                None => spaced,
            }
        }
    }
}

/// Picks a placement for a group of `size` under `policy`.
pub fn select_placement(
    policy: Policy,
    aud: &Auditorium,
    size: usize,
    rng: &mut RandomSource,
) -> Result<Placement, PolicyError> {
    let pool = candidates(policy, aud, size);
    if pool.is_empty() {
        return Err(PolicyError::NoFeasiblePlacement { size });
    }
    Ok(pool[rng.next_index(pool.len())])
}

pub fn select_random(
    aud: &Auditorium,
    size: usize,
    rng: &mut RandomSource,
) -> Result<Placement, PolicyError> {
    select_placement(Policy::Random, aud, size, rng)
}

pub fn select_max(
    aud: &Auditorium,
    size: usize,
    rng: &mut RandomSource,
) -> Result<Placement, PolicyError> {
    select_placement(Policy::Max, aud, size, rng)
}

pub fn select_space(
    aud: &Auditorium,
    size: usize,
    rng: &mut RandomSource,
) -> Result<Placement, PolicyError> {
    select_placement(Policy::Space, aud, size, rng)
}

pub fn select_simple(
    aud: &Auditorium,
    size: usize,
    rng: &mut RandomSource,
) -> Result<Placement, PolicyError> {
    select_placement(Policy::Simple, aud, size, rng)
}

pub fn select_center(
    aud: &Auditorium,
    size: usize,
    rng: &mut RandomSource,
) -> Result<Placement, PolicyError> {
    select_placement(Policy::Center, aud, size, rng)
}
