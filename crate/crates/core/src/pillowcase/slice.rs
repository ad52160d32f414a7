//! Slice solver: `ρ(a) = e^{iθ}` fixed, `ρ(b)` moving on the half circle
//! `cos θ + sin θ (cos ψ·i + sin ψ·j)`, `ψ ∈ [0, π]`.

use super::general::GeneralSolver;
use super::solver::{abelian_point, PillowSolver, SliceSolver};
use super::{PillowError, PillowPoint, Quat};
use crate::knot::{tietze, KnotPresentation};
use std::f64::consts::PI;

/// Values this close to zero count as having no sign.
const SIGN_FLOOR: f64 = 1e-13;
/// Grid minima of the defect below `max(√tol, MINIMUM_FLOOR)` are refined
/// by golden-section search.
const MINIMUM_FLOOR: f64 = 1e-2;
/// `‖ρ(a)ρ(b) − ρ(b)ρ(a)‖` below this means an abelian witness.
const COMMUTATOR_FLOOR: f64 = 1e-6;

pub(crate) fn b_image(theta: f64, psi: f64) -> Quat {
    Quat::from_angle_axis(theta, [psi.cos(), psi.sin(), 0.0])
}

pub(crate) fn a_image(theta: f64) -> Quat {
    Quat::from_angle_axis(theta, [1.0, 0.0, 0.0])
}

pub(crate) fn commutator_norm(p: Quat, q: Quat) -> f64 {
    let d = p * q;
    let e = q * p;
    Quat::new(d.w - e.w, d.x - e.x, d.y - e.y, d.z - e.z).norm()
}

/// Longitude angle of a witness, if its longitude is (numerically) of the
/// form `e^{iη}`.
pub(crate) fn longitude_angle(images: &[Quat], longitude: &[i32], slack: f64) -> Option<f64> {
    let l = Quat::eval_word(images, longitude);
    ((l.y * l.y + l.z * l.z).sqrt() <= slack).then(|| l.x.atan2(l.w))
}

/// Two-meridian presentation with meridian `a = [1]`.
#[derive(Clone, Debug)]
pub(crate) struct TwoMeridianSlices {
    pres: KnotPresentation,
    n_seeds: usize,
    tol: f64,
}

impl TwoMeridianSlices {
    pub(crate) fn new(pres: KnotPresentation, n_seeds: usize, tol: f64) -> Self {
        Self {
            pres,
            n_seeds: n_seeds.max(8),
            tol,
        }
    }

    fn images(&self, theta: f64, psi: f64) -> [Quat; 2] {
        [a_image(theta), b_image(theta, psi)]
    }

    /// Imaginary parts of all relator images.
    fn components(&self, theta: f64, psi: f64) -> Vec<f64> {
        let im = self.images(theta, psi);
        self.pres
            .relators()
            .iter()
            .flat_map(|r| {
                let q = Quat::eval_word(&im, r);
                [q.x, q.y, q.z]
            })
            .collect()
    }

    fn defect(&self, theta: f64, psi: f64) -> f64 {
        let im = self.images(theta, psi);
        self.pres
            .relators()
            .iter()
            .map(|r| Quat::eval_word(&im, r).distance_to_one())
            .fold(0.0, f64::max)
    }

    fn bisect(&self, theta: f64, comp: usize, mut lo: f64, mut hi: f64) -> f64 {
        let f = |psi: f64| self.components(theta, psi)[comp];
        let mut flo = f(lo);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = f(mid);
            if fm == 0.0 {
                return mid;
            }
            if (fm > 0.0) == (flo > 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn golden(&self, theta: f64, mut lo: f64, mut hi: f64) -> f64 {
        let g = (5f64.sqrt() - 1.0) / 2.0;
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let (mut f1, mut f2) = (self.defect(theta, x1), self.defect(theta, x2));
        for _ in 0..200 {
            if hi - lo < 1e-15 {
                break;
            }
            if f1 < f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = self.defect(theta, x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = self.defect(theta, x2);
            }
        }
        0.5 * (lo + hi)
    }

    /// All `ψ ∈ (0, π)` in the slice with relator defect at most `tol`.
    fn roots(&self, theta: f64) -> Vec<f64> {
        let n = self.n_seeds;
        let grid: Vec<f64> = (0..=n).map(|k| PI * k as f64 / n as f64).collect();
        let vals: Vec<Vec<f64>> = grid.iter().map(|&p| self.components(theta, p)).collect();
        let mut cands = vec![];
        for k in 0..n {
            for c in 0..vals[k].len() {
                let (u, v) = (vals[k][c], vals[k + 1][c]);
                if u.abs() > SIGN_FLOOR && v.abs() > SIGN_FLOOR && (u > 0.0) != (v > 0.0) {
                    cands.push(self.bisect(theta, c, grid[k], grid[k + 1]));
                }
            }
        }
        let defects: Vec<f64> = grid.iter().map(|&p| self.defect(theta, p)).collect();
        let near = self.tol.sqrt().max(MINIMUM_FLOOR);
        for k in 1..n {
            if defects[k] < near && defects[k] <= defects[k - 1] && defects[k] <= defects[k + 1] {
                cands.push(self.golden(theta, grid[k - 1], grid[k + 1]));
            }
        }
        let mut roots: Vec<f64> = cands
            .into_iter()
            .filter(|&p| self.defect(theta, p) <= self.tol)
            .collect();
        roots.sort_by(f64::total_cmp);
        roots.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        roots
    }
}

impl SliceSolver for TwoMeridianSlices {
    fn presentation(&self) -> &KnotPresentation {
        &self.pres
    }

    fn solve(&self, theta: f64) -> Result<Vec<PillowPoint>, PillowError> {
        let mut out = vec![abelian_point(&self.pres, theta)];
        if theta.sin().abs() < 1e-12 || self.pres.generator_count() < 2 {
            return Ok(out);
        }
        let slack = self.tol.sqrt();
        for psi in self.roots(theta) {
            let im = self.images(theta, psi);
            if commutator_norm(im[0], im[1]) < COMMUTATOR_FLOOR {
                continue;
            }
            match longitude_angle(&im, self.pres.longitude(), slack) {
                Some(eta) => out.push(PillowPoint::new(
                    theta,
                    eta,
                    im.to_vec(),
                    self.defect(theta, psi),
                )),
                None => log::warn!("θ = {theta}: longitude off the meridian's torus at ψ = {psi}"),
            }
        }
        Ok(out)
    }
}

/// Reduces to two meridians when possible; otherwise falls back to the
/// general meridional solver.
pub struct QuaternionSolver;

impl PillowSolver for QuaternionSolver {
    fn name(&self) -> &'static str {
        "quaternion"
    }

    fn prepare(
        &self,
        p: &KnotPresentation,
        n_seeds: usize,
        tol: f64,
    ) -> Result<Box<dyn SliceSolver>, PillowError> {
        if p.generator_count() == 1 {
            return Ok(Box::new(TwoMeridianSlices::new(p.clone(), n_seeds, tol)));
        }
        if let Some(q) = tietze::to_two_meridians(p) {
            return Ok(Box::new(TwoMeridianSlices::new(q, n_seeds, tol)));
        }
        if p.is_meridional() {
            return Ok(Box::new(GeneralSolver::new(p, n_seeds, tol)?));
        }
        Err(PillowError::UnsupportedPresentation(p.label().to_string()))
    }
}

/// Representations in the slice `θ` of a single presentation.
pub fn su2_solve_slice(
    p: &KnotPresentation,
    theta: f64,
    n_seeds: usize,
    tol: f64,
) -> Result<Vec<PillowPoint>, PillowError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(PillowError::ToleranceNotMet {
            theta,
            tol,
            defect: f64::NAN,
        });
    }
    QuaternionSolver.prepare(p, n_seeds, tol)?.solve(theta)
}
