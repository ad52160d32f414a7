//! Unit-torus slice checks for A-polynomials, the degree test, and
//! cross-validation of an A-polynomial against pillowcase samples.

use crate::apoly::APolyResult;
use crate::pillowcase::{circle_distance, PillowSet};
use crate::polyalg::{residual, roots_univar, ComplexRootSet, IntPoly2, PolyError};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::TAU;
use thiserror::Error;

/// Leading coefficients below this fraction of the largest one are treated
/// as zero after substituting `l`.
pub const LEADING_DROP: f64 = 1e-10;
/// Residual bound handed to the root finder.
pub const ROOT_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SliceError {
    #[error("slice at eta0 = {eta0} is identically zero in m")]
    DegenerateSlice { eta0: f64 },
    #[error("root finding failed at eta0 = {eta0}: {source}")]
    Roots { eta0: f64, source: PolyError },
}

#[derive(Clone, Debug, PartialEq)]
pub struct SliceRoots {
    pub roots: ComplexRootSet,
    /// `min | |m| − 1 |` over the roots, `+∞` when there are none.
    pub min_unit_distance: f64,
}

impl SliceRoots {
    /// Root closest to the unit circle.
    pub fn witness(&self) -> Option<Complex64> {
        self.roots
            .values()
            .into_iter()
            .min_by(|a, b| (a.norm() - 1.0).abs().total_cmp(&(b.norm() - 1.0).abs()))
    }
}

/// Roots in `m` of `A(m, e^{iη₀})`. Factors of `m` are removed first, so
/// the root set never contains `0`.
pub fn slice_roots(a: &IntPoly2, eta0: f64) -> Result<SliceRoots, SliceError> {
    let shift = a.terms().map(|(dm, _, _)| dm).min().unwrap_or(0);
    let l = Complex64::from_polar(1.0, eta0);
    let mut c = a.coeffs_in_m_at_l(l);
    c.drain(..(shift as usize).min(c.len()));
    let big = c.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if big == 0.0 {
        return Err(SliceError::DegenerateSlice { eta0 });
    }
    while c.last().is_some_and(|z| z.norm() <= LEADING_DROP * big) {
        c.pop();
    }
    if c.len() < 2 {
        return Ok(SliceRoots {
            roots: ComplexRootSet {
                roots: vec![],
                tolerance: ROOT_TOL,
            },
            min_unit_distance: f64::INFINITY,
        });
    }
    let roots = roots_univar(&c, ROOT_TOL).map_err(|source| SliceError::Roots { eta0, source })?;
    let min_unit_distance = roots
        .values()
        .iter()
        .map(|z| (z.norm() - 1.0).abs())
        .fold(f64::INFINITY, f64::min);
    Ok(SliceRoots {
        roots,
        min_unit_distance,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SliceEntry {
    pub eta0: f64,
    pub min_unit_distance: f64,
    /// Root nearest the unit circle; `1` for a degenerate slice, NaN if
    /// the slice has no roots.
    pub root: (f64, f64),
    pub residual: f64,
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SliceReport {
    pub slices: Vec<SliceEntry>,
    pub tolerance: f64,
    pub pass: bool,
}

impl SliceReport {
    pub fn eta0_grid(&self) -> Vec<f64> {
        self.slices.iter().map(|s| s.eta0).collect()
    }

    pub fn failing(&self) -> impl Iterator<Item = &SliceEntry> {
        self.slices
            .iter()
            .filter(move |s| !(s.min_unit_distance < self.tolerance))
    }

    pub fn worst(&self) -> f64 {
        self.slices
            .iter()
            .map(|s| s.min_unit_distance)
            .fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("eta0,min_unit_distance,root_re,root_im\n");
        for s in &self.slices {
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                s.eta0, s.min_unit_distance, s.root.0, s.root.1
            ));
        }
        out
    }
}

fn slice_entry(a: &IntPoly2, eta0: f64) -> SliceEntry {
    match slice_roots(a, eta0) {
        Ok(r) => {
            let (root, res) = match r.witness() {
                Some(z) => {
                    let rr = r
                        .roots
                        .roots
                        .iter()
                        .find(|x| x.value == z)
                        .map_or(f64::NAN, |x| x.residual);
                    ((z.re, z.im), rr)
                }
                None => ((f64::NAN, f64::NAN), f64::NAN),
            };
            SliceEntry {
                eta0,
                min_unit_distance: r.min_unit_distance,
                root,
                residual: res,
                degenerate: false,
            }
        }
        Err(SliceError::DegenerateSlice { .. }) => SliceEntry {
            eta0,
            min_unit_distance: 0.0,
            root: (1.0, 0.0),
            residual: 0.0,
            degenerate: true,
        },
        Err(SliceError::Roots { source, .. }) => {
            log::warn!("slice {eta0}: {source}");
            SliceEntry {
                eta0,
                min_unit_distance: f64::INFINITY,
                root: (f64::NAN, f64::NAN),
                residual: match source {
                    PolyError::NonConvergence { worst_residual } => worst_residual,
                    _ => f64::NAN,
                },
                degenerate: false,
            }
        }
    }
}

/// Sweeps `η₀ = 2πk/N`. A slice that vanishes identically has every `m`
/// as a root and counts as distance `0`.
pub fn check_all_slices(a: &IntPoly2, n: usize, tol: f64) -> SliceReport {
    let n = n.max(4);
    let slices: Vec<SliceEntry> = (0..n)
        .into_par_iter()
        .map(|k| slice_entry(a, TAU * k as f64 / n as f64))
        .collect();
    let pass = slices.iter().all(|s| s.min_unit_distance < tol);
    SliceReport {
        slices,
        tolerance: tol,
        pass,
    }
}

/// Whether the A-polynomial depends on `m`.
pub fn deg_m_nonzero(a: &APolyResult) -> bool {
    a.nontrivial_factor.mul(&IntPoly2::l_minus_one()).deg_m() >= 1
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlaggedPoint {
    pub theta: f64,
    pub eta: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossValidation {
    /// Points with `η` away from `0`.
    pub checked: usize,
    /// Points whose normalized value exceeds the tolerance.
    pub flagged: Vec<FlaggedPoint>,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CrossValidation {
    pub fn flagged_fraction(&self) -> f64 {
        if self.checked == 0 {
            0.0
        } else {
            self.flagged.len() as f64 / self.checked as f64
        }
    }
}

/// `|A(e^{iθ}, e^{iη})| / Σ|c|` at every sample with `η` farther than `δ`
/// from `0`.
pub fn cross_validate(a: &IntPoly2, s: &PillowSet, tol: f64) -> CrossValidation {
    let scale = a.abs_coeff_sum();
    let vals: Vec<(f64, f64, f64)> = s
        .points
        .iter()
        .filter(|p| circle_distance(p.eta, 0.0) > s.delta)
        .map(|p| {
            let v = a.eval_complex(
                Complex64::from_polar(1.0, p.theta),
                Complex64::from_polar(1.0, p.eta),
            );
            let r = if scale > 0.0 { v.norm() / scale } else { 0.0 };
            (p.theta, p.eta, r)
        })
        .collect();
    let flagged: Vec<FlaggedPoint> = vals
        .iter()
        .filter(|v| !(v.2 < tol))
        .map(|&(theta, eta, residual)| FlaggedPoint {
            theta,
            eta,
            residual,
        })
        .collect();
    let max_residual = vals.iter().map(|v| v.2).fold(0.0, f64::max);
    let checked = vals.len();
    let mut out = CrossValidation {
        checked,
        flagged,
        max_residual,
        tolerance: tol,
        pass: true,
    };
    out.pass = out.flagged_fraction() < 0.01;
    out
}

/// Relative residual of `m` as a root of the `η₀` slice.
pub fn slice_residual(a: &IntPoly2, eta0: f64, m: Complex64) -> f64 {
    residual(&a.coeffs_in_m_at_l(Complex64::from_polar(1.0, eta0)), m)
}
