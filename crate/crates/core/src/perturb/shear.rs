//! Odd, 2π-periodic piecewise-linear shear functions.

use super::PerturbError;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Piecewise-linear function on `[0, π]` vanishing at both ends, extended
/// oddly and 2π-periodically.
#[derive(Clone, Debug, PartialEq)]
pub struct ShearFn {
    knots: Vec<(f64, f64)>,
    lipschitz: f64,
}

#[derive(Serialize, Deserialize)]
pub struct ShearJson {
    pub knots: Vec<(f64, f64)>,
    pub lipschitz: f64,
}

/// Knots closer than this are treated as one abscissa.
const KNOT_EPS: f64 = 1e-12;

impl ShearFn {
    pub fn zero() -> Self {
        Self {
            knots: vec![(0.0, 0.0), (PI, 0.0)],
            lipschitz: 0.0,
        }
    }

    /// Validates `0 = x₀ < x₁ < … < xₙ = π` with zero values at both ends.
    pub fn from_knots(knots: Vec<(f64, f64)>) -> Result<Self, PerturbError> {
        let bad = |m: &str| Err(PerturbError::InvalidShear(m.to_string()));
        if knots.len() < 2 {
            return bad("at least two knots are required");
        }
        let (first, last) = (knots[0], knots[knots.len() - 1]);
        if first.0 != 0.0 || (last.0 - PI).abs() > KNOT_EPS {
            return bad("knots must start at 0 and end at π");
        }
        if first.1 != 0.0 || last.1 != 0.0 {
            return bad("an odd 2π-periodic function vanishes at 0 and π");
        }
        if knots.iter().any(|k| !k.0.is_finite() || !k.1.is_finite()) {
            return bad("knots must be finite");
        }
        let mut lipschitz: f64 = 0.0;
        for w in knots.windows(2) {
            let dx = w[1].0 - w[0].0;
            if dx <= 0.0 {
                return bad("knot abscissae must increase strictly");
            }
            lipschitz = lipschitz.max((w[1].1 - w[0].1).abs() / dx);
        }
        let mut knots = knots;
        let n = knots.len();
        knots[n - 1].0 = PI;
        Ok(Self { knots, lipschitz })
    }

    /// Builds knots from breakpoints that may repeat or overshoot `[0, π]`:
    /// abscissae are clamped, near-duplicates merged (first value wins).
    pub(crate) fn from_breakpoints(mut pts: Vec<(f64, f64)>) -> Result<Self, PerturbError> {
        pts.retain(|p| p.0 > KNOT_EPS && p.0 < PI - KNOT_EPS);
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut knots = vec![(0.0, 0.0)];
        for p in pts {
            if p.0 - knots[knots.len() - 1].0 > 1e-9 {
                knots.push(p);
            }
        }
        if PI - knots[knots.len() - 1].0 <= 1e-9 && knots.len() > 1 {
            knots.pop();
        }
        knots.push((PI, 0.0));
        Self::from_knots(knots)
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// `max |g|`.
    pub fn bound(&self) -> f64 {
        self.knots.iter().map(|k| k.1.abs()).fold(0.0, f64::max)
    }

    fn eval_half(&self, x: f64) -> f64 {
        let i = self.knots.partition_point(|k| k.0 <= x);
        if i == 0 {
            return self.knots[0].1;
        }
        if i >= self.knots.len() {
            return self.knots[self.knots.len() - 1].1;
        }
        let (x0, y0) = self.knots[i - 1];
        let (x1, y1) = self.knots[i];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut r = x.rem_euclid(TAU);
        if r > PI {
            r -= TAU;
        }
        if r < 0.0 {
            -self.eval_half(-r)
        } else {
            self.eval_half(r)
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            knots: self.knots.iter().map(|&(x, v)| (x, -v)).collect(),
            lipschitz: self.lipschitz,
        }
    }

    pub fn to_json(&self) -> ShearJson {
        ShearJson {
            knots: self.knots.clone(),
            lipschitz: self.lipschitz,
        }
    }

    /// The stored Lipschitz constant is recomputed, not trusted.
    pub fn from_json(doc: &ShearJson) -> Result<Self, PerturbError> {
        Self::from_knots(doc.knots.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tent() -> ShearFn {
        ShearFn::from_knots(vec![(0.0, 0.0), (1.0, 0.5), (2.0, 0.5), (PI, 0.0)]).unwrap()
    }

    #[test]
    fn forced_zeros() {
        let g = tent();
        for x in [0.0, PI, -PI, TAU, 3.0 * PI] {
            assert!(g.eval(x).abs() < 1e-15, "{x}");
        }
        assert_eq!(ShearFn::zero().eval(1.234), 0.0);
    }

    #[test]
    fn odd_and_periodic() {
        let g = tent();
        for x in [0.1, 0.9, 1.5, 2.7, 3.0] {
            assert!((g.eval(-x) + g.eval(x)).abs() < 1e-15);
            assert!((g.eval(x + TAU) - g.eval(x)).abs() < 1e-12);
        }
        assert!((g.eval(1.5) - 0.5).abs() < 1e-15);
        assert!((g.eval(0.5) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn lipschitz_and_bound() {
        let g = tent();
        assert!((g.lipschitz() - 0.5).abs() < 1e-12);
        assert_eq!(g.bound(), 0.5);
    }

    #[test]
    fn rejects_invalid_knots() {
        assert!(ShearFn::from_knots(vec![(0.0, 0.1), (PI, 0.0)]).is_err());
        assert!(ShearFn::from_knots(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 0.2), (PI, 0.0)]).is_err());
        assert!(ShearFn::from_knots(vec![(0.0, 0.0), (3.0, 0.0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = tent();
        let s = serde_json::to_string(&g.to_json()).unwrap();
        let back: ShearJson = serde_json::from_str(&s).unwrap();
        assert_eq!(ShearFn::from_json(&back).unwrap(), g);
    }
}
