//! Per-step aggregation of entropy trajectories, generic over the float type.

use num_traits::{Float, FromPrimitive};

use crate::simulation::Trajectory;

/// Floating-point scalar used for aggregated statistics.
pub trait Scalar: Float + FromPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync {}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Per-step mean, population standard deviation, minimum and maximum of a
/// set of trajectories.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanTrajectoryOf<T> {
    pub mean: Vec<T>,
    pub std: Vec<T>,
    pub min: Vec<T>,
    pub max: Vec<T>,
    pub run_count: usize,
}

impl<T: Scalar> MeanTrajectoryOf<T> {
    /// Aggregates `runs` in slice order. Returns `None` when `runs` is empty
    /// or the trajectories differ in length.
    pub fn aggregate(runs: &[Trajectory]) -> Option<Self> {
        let first = runs.first()?;
        let steps = first.len();
        if runs.iter().any(|t| t.len() != steps) {
            return None;
        }
        let n = T::from_usize(runs.len())?;
        let mut out = Self {
            mean: Vec::with_capacity(steps),
            std: Vec::with_capacity(steps),
            min: Vec::with_capacity(steps),
            max: Vec::with_capacity(steps),
            run_count: runs.len(),
        };
        for step in 0..steps {
            let values = runs.iter().map(|t| t.value_at(step));
            // integer sum keeps the mean exact up to the final division
            let sum: u128 = values.clone().map(u128::from).sum();
            let mean = T::from_u128(sum)? / n;
            let sq: T = values
                .clone()
                .map(|v| {
                    let d = T::from_u64(v).unwrap_or_else(T::nan) - mean;
                    d * d
                })
                .fold(T::zero(), |a, b| a + b);
            let lo = values.clone().min()?;
            let hi = values.max()?;
            out.mean.push(mean);
            out.std.push((sq / n).sqrt());
            out.min.push(T::from_u64(lo)?);
            out.max.push(T::from_u64(hi)?);
        }
        Some(out)
    }

    /// Degenerate aggregate of a single trajectory: mean = min = max = the
    /// values, std = 0.
    pub fn from_trajectory(t: &Trajectory) -> Self {
        Self::aggregate(std::slice::from_ref(t)).expect("a single trajectory always aggregates")
    }

    pub fn len(&self) -> usize {
        self.mean.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mean.is_empty()
    }

    /// Mean absolute difference between this mean curve and `reference`,
    /// averaged over steps.
    pub fn mean_abs_deviation(&self, reference: &Trajectory) -> Option<T> {
        if reference.len() != self.len() || self.is_empty() {
            return None;
        }
        let total = self
            .mean
            .iter()
            .zip(reference.iter_values())
            .map(|(&m, r)| (m - T::from_u64(r).unwrap_or_else(T::nan)).abs())
            .fold(T::zero(), |a, b| a + b);
        Some(total / T::from_usize(self.len())?)
    }
}
