//! Best-effort slice solver for meridional presentations with more than two
//! generators: Levenberg–Marquardt from a deterministic low-discrepancy
//! seed set.

use super::slice::{a_image, b_image, commutator_norm, longitude_angle};
use super::solver::{abelian_point, SliceSolver};
use super::{PillowError, PillowPoint, Quat};
use crate::knot::KnotPresentation;
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;

const MAX_SEEDS: usize = 256;
const MAX_ITERS: usize = 100;

fn halton(mut i: usize, base: usize) -> f64 {
    let (mut f, mut r) = (1.0, 0.0);
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

const PRIMES: [usize; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub(crate) struct GeneralSolver {
    pres: KnotPresentation,
    seeds: usize,
    tol: f64,
}

impl GeneralSolver {
    pub(crate) fn new(p: &KnotPresentation, n_seeds: usize, tol: f64) -> Result<Self, PillowError> {
        if p.meridian() != &[1] || 1 + 2 * p.generator_count().saturating_sub(2) > PRIMES.len() {
            return Err(PillowError::UnsupportedPresentation(p.label().to_string()));
        }
        Ok(Self {
            pres: p.clone(),
            seeds: n_seeds.clamp(16, MAX_SEEDS),
            tol,
        })
    }

    fn dim(&self) -> usize {
        1 + 2 * (self.pres.generator_count() - 2)
    }

    /// Parameters: `ψ` for generator 2, then `(α, β)` per further generator.
    fn images(&self, theta: f64, x: &[f64]) -> Vec<Quat> {
        let mut im = vec![a_image(theta), b_image(theta, x[0])];
        for c in x[1..].chunks(2) {
            let (sa, ca) = c[0].sin_cos();
            let (sb, cb) = c[1].sin_cos();
            im.push(Quat::from_angle_axis(theta, [ca, sa * cb, sa * sb]));
        }
        im
    }

    fn residuals(&self, theta: f64, x: &[f64]) -> DVector<f64> {
        let im = self.images(theta, x);
        let v: Vec<f64> = self
            .pres
            .relators()
            .iter()
            .flat_map(|r| {
                let q = Quat::eval_word(&im, r);
                [q.w - 1.0, q.x, q.y, q.z]
            })
            .collect();
        DVector::from_vec(v)
    }

    fn defect(&self, theta: f64, x: &[f64]) -> f64 {
        let im = self.images(theta, x);
        self.pres
            .relators()
            .iter()
            .map(|r| Quat::eval_word(&im, r).distance_to_one())
            .fold(0.0, f64::max)
    }

    fn levenberg_marquardt(&self, theta: f64, mut x: Vec<f64>) -> Vec<f64> {
        let n = x.len();
        let mut lambda = 1e-3;
        let mut r = self.residuals(theta, &x);
        let mut cost = r.norm_squared();
        for _ in 0..MAX_ITERS {
            if cost.sqrt() < self.tol * 1e-2 {
                break;
            }
            let mut jac = DMatrix::zeros(r.len(), n);
            for j in 0..n {
                let h = 1e-7;
                let mut xp = x.clone();
                let mut xm = x.clone();
                xp[j] += h;
                xm[j] -= h;
                let col = (self.residuals(theta, &xp) - self.residuals(theta, &xm)) / (2.0 * h);
                jac.set_column(j, &col);
            }
            let jt = jac.transpose();
            let jtj = &jt * &jac;
            let g = &jt * &r;
            let mut improved = false;
            for _ in 0..20 {
                let mut a = jtj.clone();
                for i in 0..n {
                    a[(i, i)] += lambda * (1.0 + jtj[(i, i)]);
                }
                let Some(step) = a.lu().solve(&(-&g)) else {
                    lambda *= 10.0;
                    continue;
                };
                let xn: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
                let rn = self.residuals(theta, &xn);
                let cn = rn.norm_squared();
                if cn < cost {
                    x = xn;
                    r = rn;
                    cost = cn;
                    lambda = (lambda / 10.0).max(1e-12);
                    improved = true;
                    break;
                }
                lambda *= 10.0;
            }
            if !improved {
                break;
            }
        }
        x
    }
}

impl SliceSolver for GeneralSolver {
    fn presentation(&self) -> &KnotPresentation {
        &self.pres
    }

    fn solve(&self, theta: f64) -> Result<Vec<PillowPoint>, PillowError> {
        let mut out = vec![abelian_point(&self.pres, theta)];
        if theta.sin().abs() < 1e-12 {
            return Ok(out);
        }
        let d = self.dim();
        let slack = self.tol.sqrt();
        for s in 1..=self.seeds {
            let x0: Vec<f64> = (0..d)
                .map(|j| {
                    let u = halton(s, PRIMES[j]);
                    if j > 0 && j % 2 == 0 {
                        2.0 * PI * u
                    } else {
                        PI * u
                    }
                })
                .collect();
            let x = self.levenberg_marquardt(theta, x0);
            let defect = self.defect(theta, &x);
            if defect > self.tol {
                continue;
            }
            let im = self.images(theta, &x);
            let irreducible = im[1..].iter().any(|&q| commutator_norm(im[0], q) > 1e-6);
            if !irreducible {
                continue;
            }
            if let Some(eta) = longitude_angle(&im, self.pres.longitude(), slack) {
                out.push(PillowPoint::new(theta, eta, im, defect));
            }
        }
        Ok(out)
    }
}
