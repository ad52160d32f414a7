//! Chains of boundary angles solving the glued critical-point relations.

use super::ShearFn;
use crate::pillowcase::{torus_distance, wrap_angle, PillowSet};
use serde::Serialize;
use std::f64::consts::PI;

/// `(θ₋₁, η₋₁) ∈ P₁`, `(θ₀, η₀)`, `(θ̂₀, η̂₀) = ±(θ₀, η₀)` and
/// `(θ₁, η₁)` matched with a point of `P₂ + (0, π)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriticalMatch {
    pub point_minus1: (f64, f64),
    pub point_0: (f64, f64),
    pub point_hat0: (f64, f64),
    pub point_1: (f64, f64),
    /// The point of `P₂ + (0, π)` that `point_1` lands on.
    pub target: (f64, f64),
    /// `+1` or `−1`: the branch `(θ̂₀, η̂₀) = ±(θ₀, η₀)`.
    pub sign: i8,
    pub residual: f64,
}

fn wrap2(p: (f64, f64)) -> (f64, f64) {
    (wrap_angle(p.0), wrap_angle(p.1))
}

/// With `f₁' = −g₁`, `f₂' = −g₂`: `η₀ = η₋₁`, `θ₀ = θ₋₁ − f₁'(η₀)`,
/// `θ₁ = θ̂₀`, `η₁ = η̂₀ − f₂'(θ₁)`.
pub fn enumerate_critical_points(
    p1: &PillowSet,
    p2: &PillowSet,
    g1: &ShearFn,
    g2: &ShearFn,
    tol: f64,
) -> Vec<CriticalMatch> {
    let targets: Vec<(f64, f64)> = p2
        .coords()
        .into_iter()
        .map(|(t, e)| wrap2((t, e + PI)))
        .collect();
    let mut out = vec![];
    for x in p1.coords() {
        let eta0 = x.1;
        let theta0 = x.0 + g1.eval(eta0);
        for sign in [1i8, -1] {
            let s = sign as f64;
            let hat = (s * theta0, s * eta0);
            let p1_pt = (hat.0, hat.1 + g2.eval(hat.0));
            for &y in &targets {
                let d = torus_distance(p1_pt, y);
                if d < tol {
                    out.push(CriticalMatch {
                        point_minus1: wrap2(x),
                        point_0: wrap2((theta0, eta0)),
                        point_hat0: wrap2(hat),
                        point_1: wrap2(p1_pt),
                        target: y,
                        sign,
                        residual: d,
                    });
                }
            }
        }
    }
    out
}

/// Re-derives the chain relations of a match by direct substitution and
/// returns the worst violation.
pub fn chain_violation(m: &CriticalMatch, g1: &ShearFn, g2: &ShearFn) -> f64 {
    use crate::pillowcase::circle_distance as cd;
    let (tm, em) = m.point_minus1;
    let (t0, e0) = m.point_0;
    let (th, eh) = m.point_hat0;
    let (t1, e1) = m.point_1;
    let s = m.sign as f64;
    [
        cd(em, e0),
        cd(tm - t0, -g1.eval(e0)),
        cd(th, s * t0).max(cd(eh, s * e0)),
        cd(th, t1),
        cd(eh - e1, -g2.eval(t1)),
        (torus_distance(m.point_1, m.target) - m.residual).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}
