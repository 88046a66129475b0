//! Seat-selection simulation for a rectangular auditorium.
//!
//! Groups arrive one at a time and claim a contiguous run of seats in a
//! single row according to a [`Policy`]. After every arrival the
//! row-transition [`entropy`](entropy::entropy) of the occupancy grid is
//! recorded, and trajectories are averaged over seeded Monte Carlo runs.
//!
//! Grid quantities (distances, entropy) are exact integers. Aggregated
//! statistics are generic over the float type; [`MeanTrajectory`] and
//! [`MeanTrajectoryF32`] fix it to `f64` and `f32`.

pub mod analysis;
pub mod cli;
pub mod entropy;
pub mod grid;
pub mod io;
pub mod policy;
pub mod simulation;
pub mod stats;

pub use analysis::{ChoiceRecord, Histogram};
pub use entropy::EntropyScore;
pub use grid::{Auditorium, Distance, Placement, SeatCoord};
pub use policy::{Policy, RandomSource};
pub use simulation::{Scenario, Trajectory};
pub use stats::{MeanTrajectoryOf, Scalar};

/// Aggregated trajectory in double precision.
pub type MeanTrajectory = MeanTrajectoryOf<f64>;
/// Aggregated trajectory in single precision.
pub type MeanTrajectoryF32 = MeanTrajectoryOf<f32>;
