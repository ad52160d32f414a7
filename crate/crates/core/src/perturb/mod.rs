//! Holonomy-perturbation planning on the pillowcase: odd periodic shears,
//! the finite-set avoidance planner, the slice-path planner, separation
//! certificates and enumeration of critical-point angle chains.

mod avoid;
mod certificate;
mod critical;
mod shear;
mod slicepath;

pub use avoid::{plan_finite_avoidance, AvoidancePlan};
pub use certificate::{certify_points, check_certificate, shear_both, Certificate};
pub use critical::{chain_violation, enumerate_critical_points, CriticalMatch};
pub use shear::{ShearFn, ShearJson};
pub use slicepath::{path_segments, plan_slice_path, SlicePlan};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PerturbError {
    #[error("no avoiding shears: {reason} (blocking points {blocking:?})")]
    Infeasible {
        reason: String,
        blocking: Vec<(f64, f64)>,
    },
    #[error("the circle η = {eta0} meets the image (blocking points {blocking:?})")]
    SliceBlocked {
        eta0: f64,
        blocking: Vec<(f64, f64)>,
    },
    #[error("corridor width {width:e} is below {required:e}")]
    CorridorTooNarrow { width: f64, required: f64 },
    #[error("invalid shear: {0}")]
    InvalidShear(String),
}

#[cfg(test)]
mod tests;
