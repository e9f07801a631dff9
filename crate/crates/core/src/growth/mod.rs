//! Numerics for the per-capita growth model
//!
//! ```text
//! k' = a0 k^alpha - (n + delta) k - c
//! c' = (c / theta) (a0 alpha k^(alpha - 1) - (rho + n + delta))
//! ```
//!
//! with CRRA utility of constant elasticity `theta`. Capital `k` is measured
//! per head of the population stock and consumption `c` per head per unit
//! time.

mod certify;
mod diagnostics;
mod integrate;
mod linear;
mod model;
pub mod ode;
mod output;
mod phase;
mod shoot;
mod welfare;

pub use certify::certification_model;
pub use diagnostics::{
    cobb_douglas_reproduction, decomposition_residual, euler_residual, EulerResiduals,
};
pub use integrate::{integrate, Status, Trajectory};
pub use linear::{eigen2, Eigen2};
pub use model::{crra_utility, jacobian, production, rhs, steady_state, GrowthParams, State, SteadyState};
pub use output::{write_nullclines_csv, write_phase_field_csv, write_trajectory_csv};
pub use phase::{phase_grid, FieldPoint, PhaseGrid};
pub use shoot::{saddle_path, saddle_path_with, SaddlePath, ShootingOptions};
pub use welfare::{discounted_utility, discounted_utility_series, frozen_consumption, Welfare};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrowthError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("outside the model domain: {0}")]
    Domain(String),
    #[error("no steady state (k* = {k}, c* = {c})")]
    NoSteadyState { k: f64, c: f64 },
    #[error("step h = {h} leaves the domain on the first step")]
    StepTooLarge { h: f64 },
    #[error("shooting failed after {iterations} iterations, bracket [{}, {}]", .bracket.0, .bracket.1)]
    ShootingFailed { iterations: usize, bracket: (f64, f64) },
    #[error("grid has {0} points, need at least 3")]
    GridTooShort(usize),
}

pub type Result<T> = std::result::Result<T, GrowthError>;
