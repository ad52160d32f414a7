//! Separation certificate for `(S + (g₁, *)) + (*, g₂)` against `S + (0, π)`.

use super::ShearFn;
use crate::pillowcase::{torus_distance, PillowSet};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    /// Minimum torus max-metric distance between the two transformed sets.
    pub margin: f64,
    pub delta: f64,
    pub lipschitz: f64,
    pub pass: bool,
    pub context: String,
    /// A closest pair `(t, u)` realizing the margin, if both sets are
    /// non-empty.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closest: Option<((f64, f64), (f64, f64))>,
}

impl Certificate {
    /// `2·δ·(1 + L)`.
    pub fn threshold(&self) -> f64 {
        2.0 * self.delta * (1.0 + self.lipschitz)
    }
}

/// `S ∪ −S`.
pub(crate) fn with_negatives(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut out = points.to_vec();
    out.extend(points.iter().map(|&(t, e)| (-t, -e)));
    out
}

/// `(θ, η) ↦ (θ + g₁(η), η) ↦ (θ', η + g₂(θ'))`.
pub fn shear_both(p: (f64, f64), g1: &ShearFn, g2: &ShearFn) -> (f64, f64) {
    let t = p.0 + g1.eval(p.1);
    (t, p.1 + g2.eval(t))
}

/// Minimum distance and a closest pair; `π` (the torus diameter) if either
/// set is empty.
pub(crate) fn min_distance(
    a: &[(f64, f64)],
    b: &[(f64, f64)],
) -> (f64, Option<((f64, f64), (f64, f64))>) {
    if a.is_empty() || b.is_empty() {
        return (PI, None);
    }
    let best = a
        .par_iter()
        .map(|&p| {
            b.iter()
                .map(|&q| (torus_distance(p, q), (p, q)))
                .min_by(|x, y| x.0.total_cmp(&y.0))
                .expect("non-empty")
        })
        .collect::<Vec<_>>()
        .into_iter()
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .expect("non-empty");
    (best.0.min(PI), Some(best.1))
}

/// Certificate on raw coordinates, which are closed under `±` first.
pub fn certify_points(
    points: &[(f64, f64)],
    delta: f64,
    g1: &ShearFn,
    g2: &ShearFn,
) -> Certificate {
    let s = with_negatives(points);
    let t: Vec<(f64, f64)> = s.iter().map(|&p| shear_both(p, g1, g2)).collect();
    let u: Vec<(f64, f64)> = s.iter().map(|&(a, b)| (a, b + PI)).collect();
    let (margin, closest) = min_distance(&t, &u);
    let lipschitz = g1.lipschitz().max(g2.lipschitz());
    let mut c = Certificate {
        margin,
        delta,
        lipschitz,
        pass: false,
        context: format!(
            "(S+(g1,*))+(*,g2) vs S+(0,pi), |S| = {} after closing under +-",
            s.len()
        ),
        closest,
    };
    c.pass = c.margin > c.threshold();
    c
}

pub fn check_certificate(s: &PillowSet, g1: &ShearFn, g2: &ShearFn) -> Certificate {
    let mut c = certify_points(&s.coords(), s.delta, g1, g2);
    c.context = format!("{}: {}", s.label, c.context);
    c
}
