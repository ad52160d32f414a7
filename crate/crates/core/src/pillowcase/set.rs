//! Finite point sets on the pillowcase torus and their transformations.

use super::{PillowError, Quat};
use crate::perturb::ShearFn;
use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

/// Representative of `x mod 2π` in `[0, 2π)`.
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU) + 0.0;
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Distance between `a` and `b` on the circle `ℝ/2πℤ`, in `[0, π]`.
pub fn circle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Max-metric on the torus `(ℝ/2πℤ)²`.
pub fn torus_distance(p: (f64, f64), q: (f64, f64)) -> f64 {
    circle_distance(p.0, q.0).max(circle_distance(p.1, q.1))
}

fn directed(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    a.iter()
        .map(|&p| {
            b.iter()
                .map(|&q| torus_distance(p, q))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Hausdorff distance under the torus max-metric; `0` for two empty sets and
/// `∞` if exactly one is empty.
pub fn hausdorff(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => 0.0,
        (true, false) | (false, true) => f64::INFINITY,
        _ => directed(a, b).max(directed(b, a)),
    }
}

/// A representation sample: boundary angles, solution witness (one unit
/// quaternion per generator) and the relator defect of the witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PillowPoint {
    pub theta: f64,
    pub eta: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Quat>,
    pub residual: f64,
}

impl PillowPoint {
    pub fn new(theta: f64, eta: f64, witness: Vec<Quat>, residual: f64) -> Self {
        Self {
            theta: wrap_angle(theta),
            eta: wrap_angle(eta),
            witness,
            residual,
        }
    }

    pub fn coords(&self) -> (f64, f64) {
        (self.theta, self.eta)
    }

    /// The image under `(θ, η) ↦ (−θ, −η)`, witness conjugated by `j`.
    pub fn negated(&self) -> Self {
        Self::new(
            -self.theta,
            -self.eta,
            self.witness.iter().map(Quat::j_conjugate).collect(),
            self.residual,
        )
    }
}

/// Sorted, deduplicated sample of a pillowcase image.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PillowSet {
    pub points: Vec<PillowPoint>,
    pub theta_grid: usize,
    /// Sampling resolution δ.
    pub delta: f64,
    pub label: String,
}

fn sort_points(points: &mut [PillowPoint]) {
    points.sort_by(|a, b| a.theta.total_cmp(&b.theta).then(a.eta.total_cmp(&b.eta)));
}

impl PillowSet {
    /// Sorts by `(θ, η)` and drops points within `δ/2` of an earlier one.
    pub fn from_points(
        mut points: Vec<PillowPoint>,
        theta_grid: usize,
        delta: f64,
        label: impl Into<String>,
    ) -> Self {
        sort_points(&mut points);
        let radius = delta / 2.0;
        let mut kept: Vec<PillowPoint> = Vec::with_capacity(points.len());
        for p in points {
            if !kept
                .iter()
                .any(|q| torus_distance(p.coords(), q.coords()) < radius)
            {
                kept.push(p);
            }
        }
        Self {
            points: kept,
            theta_grid,
            delta,
            label: label.into(),
        }
    }

    /// Closure under `(θ, η) ↦ (−θ, −η)`, then sorted and deduplicated.
    pub fn symmetrized(&self) -> Self {
        let mut pts = self.points.clone();
        pts.extend(self.points.iter().map(PillowPoint::negated));
        Self::from_points(pts, self.theta_grid, self.delta, self.label.clone())
    }

    pub fn coords(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(PillowPoint::coords).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// A set of bare points (no witnesses, zero residual), kept in the given
    /// order.
    pub fn from_coords(coords: &[(f64, f64)], delta: f64, label: impl Into<String>) -> Self {
        Self {
            points: coords
                .iter()
                .map(|&(t, e)| PillowPoint::new(t, e, vec![], 0.0))
                .collect(),
            theta_grid: (TAU / delta).round() as usize,
            delta,
            label: label.into(),
        }
    }

    /// `theta,eta,residual` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,eta,residual\n");
        for p in &self.points {
            out.push_str(&format!(
                "{:.16e},{:.16e},{:.16e}\n",
                p.theta, p.eta, p.residual
            ));
        }
        out
    }

    pub fn from_csv(text: &str, delta: f64, label: &str) -> Result<Self, PillowError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        match lines.next().map(str::trim) {
            Some("theta,eta,residual") => {}
            other => {
                return Err(PillowError::Format(format!(
                    "expected header `theta,eta,residual`, found {other:?}"
                )))
            }
        }
        let mut points = vec![];
        for (i, line) in lines.enumerate() {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let parse = |s: &str| {
                s.parse::<f64>()
                    .map_err(|e| PillowError::Format(format!("line {}: {e}", i + 2)))
            };
            if fields.len() != 3 {
                return Err(PillowError::Format(format!(
                    "line {}: expected 3 fields",
                    i + 2
                )));
            }
            points.push(PillowPoint {
                theta: parse(fields[0])?,
                eta: parse(fields[1])?,
                witness: vec![],
                residual: parse(fields[2])?,
            });
        }
        Ok(Self {
            points,
            theta_grid: (TAU / delta).round() as usize,
            delta,
            label: label.to_string(),
        })
    }

    /// Points off the abelian line `η = 0`.
    pub fn irreducible_points(&self) -> impl Iterator<Item = &PillowPoint> {
        let tol = self.delta / 2.0;
        self.points
            .iter()
            .filter(move |p| circle_distance(p.eta, 0.0) >= tol)
    }
}

/// `S + (a, b)`; witnesses are dropped.
pub fn pillow_translate(s: &PillowSet, a: f64, b: f64) -> PillowSet {
    let mut points: Vec<PillowPoint> = s
        .points
        .iter()
        .map(|p| PillowPoint::new(p.theta + a, p.eta + b, vec![], p.residual))
        .collect();
    sort_points(&mut points);
    PillowSet {
        points,
        ..s.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShearAxis {
    /// `(θ, η) ↦ (θ + h(η), η)`.
    ThetaByEta,
    /// `(θ, η) ↦ (θ, η + h(θ))`.
    EtaByTheta,
}

/// `S + (h, *)` or `S + (*, h)`; witnesses are dropped.
pub fn pillow_shear(s: &PillowSet, h: &ShearFn, axis: ShearAxis) -> PillowSet {
    let mut points: Vec<PillowPoint> = s
        .points
        .iter()
        .map(|p| {
            let (t, e) = match axis {
                ShearAxis::ThetaByEta => (p.theta + h.eval(p.eta), p.eta),
                ShearAxis::EtaByTheta => (p.theta, p.eta + h.eval(p.theta)),
            };
            PillowPoint::new(t, e, vec![], p.residual)
        })
        .collect();
    sort_points(&mut points);
    PillowSet {
        points,
        ..s.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SymmetryReport {
    /// Hausdorff distance between `S` and `S + (π, 0)`.
    pub translation_distance: f64,
    /// Hausdorff distance between `S` and `−S`.
    pub inversion_distance: f64,
    pub delta: f64,
    pub pass: bool,
}

pub fn check_symmetries(s: &PillowSet, delta: f64) -> SymmetryReport {
    let c = s.coords();
    let shifted: Vec<(f64, f64)> = c.iter().map(|&(t, e)| (t + PI, e)).collect();
    let negated: Vec<(f64, f64)> = c.iter().map(|&(t, e)| (-t, -e)).collect();
    let translation_distance = hausdorff(&c, &shifted);
    let inversion_distance = hausdorff(&c, &negated);
    SymmetryReport {
        translation_distance,
        inversion_distance,
        delta,
        pass: translation_distance < delta && inversion_distance < delta,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_wraps() {
        assert!((circle_distance(0.1, TAU - 0.1) - 0.2).abs() < 1e-15);
        assert_eq!(torus_distance((0.0, 0.0), (PI, 0.5)), PI);
        assert_eq!(wrap_angle(-0.5), TAU - 0.5);
    }

    #[test]
    fn dedup_keeps_first_in_order() {
        let pts = vec![
            PillowPoint::new(1.0, 1.0, vec![], 0.0),
            PillowPoint::new(1.001, 1.0, vec![], 0.0),
            PillowPoint::new(2.0, 1.0, vec![], 0.0),
        ];
        let s = PillowSet::from_points(pts, 360, TAU / 360.0, "t");
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn translation_has_order_two() {
        let s = PillowSet::from_coords(&[(0.3, 1.0), (2.0, 4.0)], 0.01, "t");
        let back = pillow_translate(&pillow_translate(&s, PI, 0.0), PI, 0.0);
        assert!(hausdorff(&s.coords(), &back.coords()) < 1e-12);
        assert_eq!(pillow_translate(&s, 0.0, 0.0).coords(), s.coords());
    }

    #[test]
    fn corrupted_set_fails_symmetry() {
        let base = [(0.5, 1.0), (0.5 + PI, 1.0)];
        let mut all: Vec<(f64, f64)> = base.to_vec();
        all.extend(base.iter().map(|&(t, e)| (-t, -e)));
        let s = PillowSet::from_coords(&all, 0.05, "ok");
        assert!(check_symmetries(&s, 0.05).pass);
        all[0].1 += PI / 4.0;
        let bad = PillowSet::from_coords(&all, 0.05, "bad");
        assert!(!check_symmetries(&bad, 0.05).pass);
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let s = PillowSet::from_coords(&[(0.1, 0.2), (1.0 / 3.0, 2.0)], 0.01, "t");
        let back = PillowSet::from_csv(&s.to_csv(), 0.01, "t").unwrap();
        assert_eq!(back.coords(), s.coords());
    }
}
