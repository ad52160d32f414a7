//! Solver registry and the slice-parallel pillowcase driver.

use super::riley::RileySolver;
use super::slice::QuaternionSolver;
use super::{PillowError, PillowPoint, PillowSet, Quat};
use crate::knot::KnotPresentation;
use rayon::prelude::*;
use std::f64::consts::TAU;

/// Environment variable capping the worker pool used for slices.
pub const THREADS_ENV: &str = "PILLOWCASE_THREADS";

/// A solver prepared for one presentation, answering one `θ`-slice at a
/// time. Implementations must be deterministic.
pub trait SliceSolver: Send + Sync {
    /// The presentation whose generators the witnesses refer to.
    fn presentation(&self) -> &KnotPresentation;
    fn solve(&self, theta: f64) -> Result<Vec<PillowPoint>, PillowError>;
}

/// A pillowcase sampling method, selected by name.
pub trait PillowSolver: Send + Sync {
    fn name(&self) -> &'static str;
    fn prepare(
        &self,
        p: &KnotPresentation,
        n_seeds: usize,
        tol: f64,
    ) -> Result<Box<dyn SliceSolver>, PillowError>;
}

pub struct SolverRegistry {
    solvers: Vec<Box<dyn PillowSolver>>,
}

impl Default for SolverRegistry {
    fn default() -> Self {
        Self {
            solvers: vec![Box::new(QuaternionSolver), Box::new(RileySolver)],
        }
    }
}

impl SolverRegistry {
    pub fn register(&mut self, s: Box<dyn PillowSolver>) {
        self.solvers.push(s);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.solvers.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn PillowSolver, PillowError> {
        self.solvers
            .iter()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
            .ok_or_else(|| PillowError::UnknownSolver(name.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PillowOptions {
    pub n_theta: usize,
    pub tol: f64,
    /// Grid size in the slice parameter.
    pub n_seeds: usize,
}

impl Default for PillowOptions {
    fn default() -> Self {
        Self {
            n_theta: 360,
            tol: 1e-10,
            n_seeds: 512,
        }
    }
}

/// `(θ, 0)` with witness `g ↦ e^{iθ·w(g)}`, `w` the abelianization.
pub(crate) fn abelian_point(p: &KnotPresentation, theta: f64) -> PillowPoint {
    let images: Vec<Quat> = p
        .abelianization()
        .iter()
        .map(|&w| Quat::from_angle_axis(theta * w as f64, [1.0, 0.0, 0.0]))
        .collect();
    let residual = p
        .relators()
        .iter()
        .map(|r| Quat::eval_word(&images, r).distance_to_one())
        .fold(0.0, f64::max);
    PillowPoint::new(theta, 0.0, images, residual)
}

fn pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

pub fn compute_pillowcase_with(
    solver: &dyn PillowSolver,
    p: &KnotPresentation,
    opts: &PillowOptions,
) -> Result<PillowSet, PillowError> {
    if opts.n_theta < 8 {
        return Err(PillowError::InvalidGrid(opts.n_theta));
    }
    if !(opts.tol.is_finite() && opts.tol > 0.0) {
        return Err(PillowError::ToleranceNotMet {
            theta: 0.0,
            tol: opts.tol,
            defect: f64::NAN,
        });
    }
    let prepared = solver.prepare(p, opts.n_seeds, opts.tol)?;
    let n = opts.n_theta;
    let thetas: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    let slices: Vec<Result<Vec<PillowPoint>, PillowError>> =
        pool().install(|| thetas.par_iter().map(|&t| prepared.solve(t)).collect());
    let mut points = vec![];
    for s in slices {
        points.extend(s?);
    }
    let delta = TAU / n as f64;
    let set = PillowSet::from_points(points, n, delta, p.label());
    Ok(set.symmetrized())
}

/// Pillowcase sample with the default (quaternion) solver.
pub fn compute_pillowcase(
    p: &KnotPresentation,
    n_theta: usize,
    tol: f64,
) -> Result<PillowSet, PillowError> {
    let opts = PillowOptions {
        n_theta,
        tol,
        ..PillowOptions::default()
    };
    compute_pillowcase_with(&QuaternionSolver, p, &opts)
}
