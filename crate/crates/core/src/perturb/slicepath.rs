//! Shear whose graph avoids `S_K = R_K + (0, −π)`, following the path from
//! `(−π, 0)` through `(0, 0)` to `(π, 0)` at heights `±(η₀ − π)`.

use super::certificate::min_distance;
use super::{PerturbError, ShearFn};
use crate::pillowcase::{circle_distance, wrap_angle, PillowSet};
use serde::Serialize;
use std::f64::consts::{PI, TAU};

/// Samples per unit length used when re-checking the graph against `S_K`.
const GRAPH_SAMPLES: usize = 4096;

#[derive(Clone, Debug, Serialize)]
pub struct SlicePlan {
    /// `η₀` after reflection into `[π, 2π)`.
    pub eta0: f64,
    /// `h = η₀ − π`, the height of `c₁`.
    pub height: f64,
    /// Max-metric distance from `S_K` to the path `c₁ … c₅`.
    pub corridor: f64,
    /// Verified max-metric distance from `S_K` to the graph of `g`.
    pub margin: f64,
    #[serde(skip)]
    pub g: ShearFn,
}

/// Max-metric distance on the torus from `p` to a horizontal segment
/// `{(θ, c) : θ ∈ [a, b]}`.
fn to_horizontal(p: (f64, f64), a: f64, b: f64, c: f64) -> f64 {
    let dt = interval_distance(p.0, a, b);
    dt.max(circle_distance(p.1, c))
}

fn to_vertical(p: (f64, f64), t: f64, a: f64, b: f64) -> f64 {
    let de = interval_distance(p.1, a, b);
    de.max(circle_distance(p.0, t))
}

/// Distance on the circle from `x` to the arc `[a, b]` (`a ≤ b`, `b − a < 2π`).
fn interval_distance(x: f64, a: f64, b: f64) -> f64 {
    let r = (x - a).rem_euclid(TAU);
    if r <= b - a {
        0.0
    } else {
        (r - (b - a)).min(TAU - r)
    }
}

/// `c₁ … c₅` as (horizontal | vertical, fixed coordinate, range).
pub fn path_segments(h: f64) -> Vec<((f64, f64), (f64, f64))> {
    vec![
        ((0.0, h), (PI, h)),
        ((-PI, -h), (0.0, -h)),
        ((0.0, -h), (0.0, h)),
        ((PI, 0.0), (PI, h)),
        ((-PI, -h), (-PI, 0.0)),
    ]
}

fn distance_to_path(p: (f64, f64), h: f64) -> f64 {
    [
        to_horizontal(p, 0.0, PI, h),
        to_horizontal(p, -PI, 0.0, -h),
        to_vertical(p, 0.0, -h, h),
        to_vertical(p, PI, 0.0, h),
        to_vertical(p, -PI, -h, 0.0),
    ]
    .into_iter()
    .fold(f64::INFINITY, f64::min)
}

pub fn plan_slice_path(s_k: &PillowSet, eta0: f64) -> Result<SlicePlan, PerturbError> {
    let delta = s_k.delta;
    let mut e0 = wrap_angle(eta0);
    if e0 < PI {
        e0 = TAU - e0;
    }
    let h = e0 - PI;
    let pts = s_k.coords();
    let blocking: Vec<(f64, f64)> = pts
        .iter()
        .filter(|p| circle_distance(p.1, h) < delta || circle_distance(p.1, -h) < delta)
        .copied()
        .collect();
    if !blocking.is_empty() {
        return Err(PerturbError::SliceBlocked { eta0: e0, blocking });
    }
    let corridor = pts
        .iter()
        .map(|&p| distance_to_path(p, h))
        .fold(PI, f64::min);
    if corridor < 2.0 * delta {
        return Err(PerturbError::CorridorTooNarrow {
            width: corridor,
            required: 2.0 * delta,
        });
    }
    let r = (corridor / 2.0).min(PI / 3.0);
    let g = if h == 0.0 {
        ShearFn::zero()
    } else {
        ShearFn::from_knots(vec![(0.0, 0.0), (r, h), (PI - r, h), (PI, 0.0)])?
    };
    let n = GRAPH_SAMPLES * 7;
    let graph: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = -PI + TAU * k as f64 / n as f64;
            (t, g.eval(t))
        })
        .collect();
    // Sampling slack: consecutive graph samples are at most this far apart.
    let step = (TAU / n as f64) * (1.0 + g.lipschitz());
    let margin = (min_distance(&pts, &graph).0 - step).max(0.0);
    Ok(SlicePlan {
        eta0: e0,
        height: h,
        corridor,
        margin,
        g,
    })
}
