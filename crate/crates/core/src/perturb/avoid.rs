//! Planner for a finite pillowcase image (plus the abelian line): a shear
//! `g₁` in `θ` by `η` that pushes the finite points off the circles
//! `θ = kπ`, then a shear `g₂` in `η` by `θ` with `|g₂| < π/2` separating
//! the result from `S + (0, π)`.

use super::certificate::{certify_points, with_negatives, Certificate};
use super::{PerturbError, ShearFn};
use crate::pillowcase::{circle_distance, torus_distance, wrap_angle};
use std::f64::consts::PI;

/// Clearance targets tried in order; the first passing certificate wins.
const TARGETS: [f64; 10] = [
    PI / 2.0,
    PI / 3.0,
    PI / 4.0,
    PI / 6.0,
    PI / 8.0,
    PI / 12.0,
    PI / 16.0,
    PI / 24.0,
    PI / 32.0,
    PI / 64.0,
];

/// Candidate plateau values for `g₂`, all with `|v| < π/2`.
const G2_STEPS: i32 = 255;

#[derive(Clone, Debug)]
pub struct AvoidancePlan {
    pub g1: ShearFn,
    pub g2: ShearFn,
    pub certificate: Certificate,
}

fn dist_to_pi_z(x: f64) -> f64 {
    let r = x.rem_euclid(PI);
    r.min(PI - r)
}

/// Groups sorted abscissae whose consecutive gaps are below `gap`.
fn clusters(sorted: &[f64], gap: f64) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = vec![];
    for &x in sorted {
        match out.last_mut() {
            Some(c) if x - c.1 < gap => c.1 = x,
            _ => out.push((x, x)),
        }
    }
    out
}

/// Plateaus at `value` over each cluster widened by up to `δ/2`, joined
/// linearly, pinned to zero at `0` and `π`.
fn plateau_shear(cl: &[(f64, f64)], values: &[f64], delta: f64) -> Result<ShearFn, PerturbError> {
    let reach = delta / 2.0;
    let mut pts = vec![];
    for (i, (&(a, b), &v)) in cl.iter().zip(values).enumerate() {
        let left_gap = if i == 0 { a } else { a - cl[i - 1].1 };
        let right_gap = if i + 1 == cl.len() {
            PI - b
        } else {
            cl[i + 1].0 - b
        };
        let e_l = reach.min(left_gap / 4.0);
        let e_r = reach.min(right_gap / 4.0);
        pts.push((a - e_l, v));
        pts.push((b + e_r, v));
    }
    ShearFn::from_breakpoints(pts)
}

/// Representative of `p` or `−p` with first coordinate in `[0, π]`.
fn fold_theta(p: (f64, f64)) -> (f64, f64) {
    let t = wrap_angle(p.0);
    if t <= PI {
        (t, wrap_angle(p.1))
    } else {
        (wrap_angle(-p.0), wrap_angle(-p.1))
    }
}

/// Representative of `p` or `−p` with second coordinate in `[0, π]`.
fn fold_eta(p: (f64, f64)) -> (f64, f64) {
    let e = wrap_angle(p.1);
    if e <= PI {
        (wrap_angle(p.0), e)
    } else {
        (wrap_angle(-p.0), wrap_angle(-p.1))
    }
}

/// Largest-gap midpoint shift for the angles `θᵢ` modulo `π`; ties go to
/// the lowest midpoint. Returned in `(−π/2, π/2]`.
fn largest_gap_shift(thetas: &[f64]) -> f64 {
    let mut forbidden: Vec<f64> = thetas.iter().map(|t| (-t).rem_euclid(PI)).collect();
    forbidden.sort_by(f64::total_cmp);
    let n = forbidden.len();
    let mut best: Option<(f64, f64)> = None; // (gap, midpoint)
    for i in 0..n {
        let a = forbidden[i];
        let b = if i + 1 < n {
            forbidden[i + 1]
        } else {
            forbidden[0] + PI
        };
        let gap = b - a;
        let mid = (a + gap / 2.0).rem_euclid(PI);
        let better = match best {
            None => true,
            Some((g, m)) => gap > g + 1e-12 || ((gap - g).abs() <= 1e-12 && mid < m),
        };
        if better {
            best = Some((gap, mid));
        }
    }
    let mid = best.map_or(0.0, |b| b.1);
    if mid > PI / 2.0 {
        mid - PI
    } else {
        mid
    }
}

fn build_g1(finite: &[(f64, f64)], delta: f64, target: f64) -> Result<ShearFn, PerturbError> {
    let mut folded: Vec<(f64, f64)> = finite
        .iter()
        .map(|&p| fold_eta(p))
        .filter(|p| p.1 > delta / 2.0 && PI - p.1 > delta / 2.0)
        .collect();
    if folded.is_empty() {
        return Ok(ShearFn::zero());
    }
    folded.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.total_cmp(&b.0)));
    let etas: Vec<f64> = folded.iter().map(|p| p.1).collect();
    let cl = clusters(&etas, 2.0 * delta);
    let mut values: Vec<f64> = Vec::with_capacity(cl.len());
    let mut prev = 0.0;
    for &(a, b) in &cl {
        let thetas: Vec<f64> = folded
            .iter()
            .filter(|p| p.1 >= a && p.1 <= b)
            .map(|p| p.0)
            .collect();
        let clearance = |v: f64| {
            thetas
                .iter()
                .map(|&t| dist_to_pi_z(t + v))
                .fold(f64::INFINITY, f64::min)
        };
        let v = if clearance(prev) >= target {
            prev
        } else if clearance(0.0) >= target {
            0.0
        } else {
            largest_gap_shift(&thetas)
        };
        values.push(v);
        prev = v;
    }
    plateau_shear(&cl, &values, delta)
}

fn build_g2(
    t_finite: &[(f64, f64)],
    u_finite: &[(f64, f64)],
    delta: f64,
    target: f64,
) -> Result<ShearFn, PerturbError> {
    let t_f: Vec<(f64, f64)> = t_finite.iter().map(|&p| fold_theta(p)).collect();
    let u_f: Vec<(f64, f64)> = u_finite.iter().map(|&p| fold_theta(p)).collect();
    let mut positions: Vec<f64> = t_f.iter().chain(&u_f).map(|p| p.0).collect();
    if positions.is_empty() {
        return Ok(ShearFn::zero());
    }
    positions.sort_by(f64::total_cmp);
    let cl = clusters(&positions, 2.0 * delta);
    let candidates: Vec<f64> = {
        let mut c: Vec<f64> = (-G2_STEPS..=G2_STEPS)
            .map(|k| k as f64 * (PI / 2.0 - 1e-3) / G2_STEPS as f64)
            .collect();
        c.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(a.total_cmp(b)));
        c
    };
    let mut prev = 0.0;
    let values: Vec<f64> = cl
        .iter()
        .map(|&(a, b)| {
            let inside = |p: &&(f64, f64)| p.0 >= a && p.0 <= b;
            let ts: Vec<(f64, f64)> = t_f.iter().filter(inside).copied().collect();
            let us: Vec<(f64, f64)> = u_f.iter().filter(inside).copied().collect();
            let clearance = |v: f64| {
                let mut c = f64::INFINITY;
                for t in &ts {
                    let moved = (t.0, t.1 + v);
                    c = c.min(circle_distance(moved.1, PI));
                    for u in u_finite {
                        c = c.min(torus_distance(moved, *u));
                    }
                }
                for u in &us {
                    c = c.min(circle_distance(v, u.1));
                }
                c
            };
            let v = if clearance(prev) >= target {
                prev
            } else if clearance(0.0) >= target {
                0.0
            } else {
                let scores: Vec<f64> = candidates.iter().map(|&v| clearance(v)).collect();
                let best = scores.iter().copied().fold(0.0, f64::max);
                let goal = best.min(target);
                candidates
                    .iter()
                    .zip(&scores)
                    .find(|(_, &s)| s >= goal)
                    .map_or(0.0, |(&v, _)| v)
            };
            prev = v;
            v
        })
        .collect();
    plateau_shear(&cl, &values, delta)
}

/// Plans `g₁`, `g₂` for the finite set `points` (samples of the abelian line
/// `η = 0` may be included) at sampling resolution `delta`.
pub fn plan_finite_avoidance(
    points: &[(f64, f64)],
    delta: f64,
) -> Result<AvoidancePlan, PerturbError> {
    let s: Vec<(f64, f64)> = with_negatives(points)
        .into_iter()
        .map(|(t, e)| (wrap_angle(t), wrap_angle(e)))
        .collect();
    let blocking: Vec<(f64, f64)> = s
        .iter()
        .filter(|&&p| {
            [0.0, PI]
                .iter()
                .any(|&k| torus_distance(p, (k, PI)) < delta)
        })
        .copied()
        .collect();
    if !blocking.is_empty() {
        return Err(PerturbError::Infeasible {
            reason: "points at (kπ, ±π)".into(),
            blocking,
        });
    }
    let finite: Vec<(f64, f64)> = s
        .iter()
        .filter(|p| circle_distance(p.1, 0.0) >= delta)
        .copied()
        .collect();
    let u_finite: Vec<(f64, f64)> = finite
        .iter()
        .map(|&(t, e)| (t, wrap_angle(e + PI)))
        .collect();
    let mut best: Option<AvoidancePlan> = None;
    let mut consider = |g1: ShearFn, g2: ShearFn| -> Option<AvoidancePlan> {
        debug_assert!(g2.bound() < PI / 2.0);
        let certificate = certify_points(points, delta, &g1, &g2);
        let plan = AvoidancePlan {
            g1,
            g2,
            certificate,
        };
        if plan.certificate.pass {
            return Some(plan);
        }
        let slack = |p: &AvoidancePlan| p.certificate.margin - p.certificate.threshold();
        if best.as_ref().is_none_or(|b| slack(&plan) > slack(b)) {
            best = Some(plan);
        }
        None
    };
    if let Some(plan) = consider(ShearFn::zero(), ShearFn::zero()) {
        return Ok(plan);
    }
    for &target in &TARGETS {
        let g1 = build_g1(&finite, delta, target)?;
        let t_finite: Vec<(f64, f64)> = finite
            .iter()
            .map(|&(t, e)| (wrap_angle(t + g1.eval(e)), e))
            .collect();
        let g2 = build_g2(&t_finite, &u_finite, delta, target)?;
        if let Some(plan) = consider(g1, g2) {
            return Ok(plan);
        }
        let g2 = build_g2(&finite, &u_finite, delta, target)?;
        if let Some(plan) = consider(ShearFn::zero(), g2) {
            return Ok(plan);
        }
    }
    let best = best.expect("at least one target");
    Err(PerturbError::Infeasible {
        reason: format!(
            "best certificate margin {:.3e} does not exceed {:.3e}",
            best.certificate.margin,
            best.certificate.threshold()
        ),
        blocking: best
            .certificate
            .closest
            .map(|(a, b)| vec![a, b])
            .unwrap_or_default(),
    })
}
