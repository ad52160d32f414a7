//! Pillowcase points from real roots of the Riley polynomial.
//!
//! With `m = e^{iθ}`, `tr ρ(ab) = 2 cos 2θ + t`, and a representation is
//! conjugate into SU(2) exactly when `t` is real with
//! `0 ≤ t ≤ 4 sin²θ`; the slice angle is then
//! `ψ = arccos(1 − t / (2 sin²θ))`.

use super::slice::{a_image, b_image};
use super::solver::{abelian_point, PillowSolver, SliceSolver};
use super::{PillowError, PillowPoint, Quat};
use crate::apoly::{reduce_presentation, rep_system_riley, RepSystem};
use crate::knot::KnotPresentation;
use crate::polyalg::roots_univar;
use num_complex::Complex64;

const REAL_SLACK: f64 = 1e-7;

struct RileySlices {
    pres: KnotPresentation,
    system: RepSystem,
    tol: f64,
}

impl SliceSolver for RileySlices {
    fn presentation(&self) -> &KnotPresentation {
        &self.pres
    }

    fn solve(&self, theta: f64) -> Result<Vec<PillowPoint>, PillowError> {
        let mut out = vec![abelian_point(&self.pres, theta)];
        let s2 = theta.sin().powi(2);
        let Some(g) = self.system.riley_polynomial() else {
            return Ok(out);
        };
        if s2 < 1e-24 {
            return Ok(out);
        }
        let m = Complex64::from_polar(1.0, theta);
        let coeffs: Vec<Complex64> = g.coeffs().iter().map(|c| c.eval_complex(m)).collect();
        let roots = roots_univar(&coeffs, self.tol.max(1e-12)).map_err(|_| {
            PillowError::ToleranceNotMet {
                theta,
                tol: self.tol,
                defect: f64::NAN,
            }
        })?;
        let hi = 4.0 * s2;
        for r in &roots.roots {
            let t = r.value;
            let scale = 1.0 + t.norm();
            if t.im.abs() > REAL_SLACK * scale || t.re <= 0.0 || t.re >= hi {
                continue;
            }
            let l = self.system.longitude_value(m, t);
            if (l.norm() - 1.0).abs() > 1e-6 {
                continue;
            }
            let psi = (1.0 - t.re / (2.0 * s2)).clamp(-1.0, 1.0).acos();
            let im = [a_image(theta), b_image(theta, psi)];
            let residual = self
                .pres
                .relators()
                .iter()
                .map(|w| Quat::eval_word(&im, w).distance_to_one())
                .fold(0.0, f64::max);
            out.push(PillowPoint::new(theta, l.arg(), im.to_vec(), residual));
        }
        Ok(out)
    }
}

/// Two-bridge style presentations only.
pub struct RileySolver;

impl PillowSolver for RileySolver {
    fn name(&self) -> &'static str {
        "riley"
    }

    fn prepare(
        &self,
        p: &KnotPresentation,
        _n_seeds: usize,
        tol: f64,
    ) -> Result<Box<dyn SliceSolver>, PillowError> {
        let unsupported = |_| PillowError::UnsupportedPresentation(p.label().to_string());
        let pres = reduce_presentation(p).map_err(unsupported)?;
        let system = rep_system_riley(&pres).map_err(unsupported)?;
        Ok(Box::new(RileySlices { pres, system, tol }))
    }
}
