//! Constrained particle swarm optimization with pluggable boundary handling.
//!
//! Particles that leave the box `[l, u]` are handled in one of three ways:
//! clamped onto the violated bound ([`BoundaryMode::Boundary`]), redrawn
//! uniformly inside the box ([`BoundaryMode::Random`]), or left to fly in an
//! infinite tiling of periodic copies of the box and evaluated through the
//! wrap-around map ([`BoundaryMode::Periodic`]).
//!
//! Constraints are handled with Deb's feasibility rules ([`deb_compare`]).
//! Two engines are provided: a linearly-decreasing-inertia swarm
//! ([`LpsConfig`]) and a constriction swarm hybridized with a differential
//! evolution operator ([`DepsConfig`]).

pub mod benchmarks;
pub mod boundary;
mod error;
pub mod experiment;
pub mod problem;
pub mod rng;
pub mod swarm;

pub use boundary::{enforce_mode, finalize_answer, map_periodic, BoundaryMode, Enforced};
pub use error::{Error, Result};
pub use problem::{deb_compare, BoxBounds, Evaluator, Fitness, Preference, Problem, Sense};
pub use swarm::{run, DepsConfig, EngineConfig, LpsConfig, RunResult};
