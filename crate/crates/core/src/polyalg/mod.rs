//! Exact polynomial algebra: integer and rational polynomials, resultants,
//! square-free parts and numerical complex roots.

mod bipoly;
mod intpoly2;
mod mpoly;
mod resultant;
mod roots;
mod upoly;

pub use bipoly::BiPoly;
pub use intpoly2::{divide_out, squarefree, IntPoly2, IntPoly2Json};
pub use mpoly::{Exponents, MPoly, Scalar};
pub use resultant::{bareiss_det, resultant, sylvester_matrix};
pub use roots::{residual, roots_univar, ComplexRoot, ComplexRootSet, MAX_SWEEPS};
pub use upoly::UPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("resultant of a zero polynomial")]
    ZeroInput,
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("root iteration did not converge (worst residual {worst_residual:e})")]
    NonConvergence { worst_residual: f64 },
    #[error("malformed polynomial document: {0}")]
    Format(String),
}
