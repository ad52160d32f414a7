//! SU(2) pillowcase images of knot complements: boundary holonomy angles
//! `(θ, η)` of representations of the knot group, sampled slice by slice in
//! `θ`, plus the torus set operations used by the perturbation planners.

mod general;
mod quat;
mod riley;
mod set;
mod slice;
mod solver;

pub use quat::Quat;
pub use riley::RileySolver;
pub use set::{
    check_symmetries, circle_distance, hausdorff, pillow_shear, pillow_translate, torus_distance,
    wrap_angle, PillowPoint, PillowSet, ShearAxis, SymmetryReport,
};
pub use slice::{su2_solve_slice, QuaternionSolver};
pub use solver::{
    compute_pillowcase, compute_pillowcase_with, PillowOptions, PillowSolver, SliceSolver,
    SolverRegistry, THREADS_ENV,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PillowError {
    #[error("unsupported presentation `{0}`")]
    UnsupportedPresentation(String),
    #[error("tolerance {tol:e} is not attainable (slice θ = {theta}, defect {defect:e})")]
    ToleranceNotMet { theta: f64, tol: f64, defect: f64 },
    #[error("theta grid {0} is below the minimum of 8")]
    InvalidGrid(usize),
    #[error("unknown pillowcase solver `{0}`")]
    UnknownSolver(String),
    #[error("malformed pillowcase document: {0}")]
    Format(String),
}
