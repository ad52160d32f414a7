use super::*;
use crate::pillowcase::{torus_distance, PillowSet};
use std::f64::consts::{PI, TAU};

const DELTA: f64 = TAU / 360.0;

fn abelian_line(n: usize) -> Vec<(f64, f64)> {
    (0..n).map(|k| (TAU * k as f64 / n as f64, 0.0)).collect()
}

fn brute_margin(points: &[(f64, f64)], g1: &ShearFn, g2: &ShearFn) -> f64 {
    let mut s = points.to_vec();
    s.extend(points.iter().map(|&(t, e)| (-t, -e)));
    let mut m = PI;
    for &p in &s {
        let t = shear_both(p, g1, g2);
        for &q in &s {
            m = m.min(torus_distance(t, (q.0, q.1 + PI)));
        }
    }
    m
}

#[test]
fn empty_set_gets_zero_shears() {
    let plan = plan_finite_avoidance(&[], DELTA).unwrap();
    assert_eq!(plan.g1, ShearFn::zero());
    assert_eq!(plan.g2, ShearFn::zero());
    assert_eq!(plan.certificate.margin, PI);
    assert!(plan.certificate.pass);
}

#[test]
fn abelian_line_certificate_has_margin_pi() {
    let s = PillowSet::from_coords(&abelian_line(360), DELTA, "line");
    let c = check_certificate(&s, &ShearFn::zero(), &ShearFn::zero());
    assert!((c.margin - PI).abs() < 1e-12);
    assert!(c.pass);
}

#[test]
fn coinciding_pair_fails() {
    let s = PillowSet::from_coords(&[(1.0, PI / 2.0), (1.0, 3.0 * PI / 2.0)], DELTA, "pair");
    let c = check_certificate(&s, &ShearFn::zero(), &ShearFn::zero());
    assert!(c.margin < 1e-12);
    assert!(!c.pass);
}

#[test]
fn synthetic_two_points_plan() {
    let mut pts = vec![(0.3, 1.0), (2.0, 4.0)];
    pts.extend(abelian_line(360));
    let plan = plan_finite_avoidance(&pts, DELTA).unwrap();
    assert!(plan.certificate.pass);
    assert!(plan.g2.bound() < PI / 2.0);
    let m = brute_margin(&pts, &plan.g1, &plan.g2);
    assert!((m - plan.certificate.margin).abs() < 1e-12);
}

#[test]
fn point_at_zero_pi_is_infeasible() {
    let mut pts = vec![(0.0, PI), (2.0, 1.0)];
    pts.extend(abelian_line(360));
    match plan_finite_avoidance(&pts, DELTA) {
        Err(PerturbError::Infeasible { blocking, .. }) => {
            assert!(blocking
                .iter()
                .any(|&p| torus_distance(p, (0.0, PI)) < 1e-12));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn points_near_eta_pi_need_g2() {
    let mut pts = vec![(1.0, PI - 0.01), (2.2, PI + 0.3)];
    pts.extend(abelian_line(360));
    let zero = certify_points(&pts, DELTA, &ShearFn::zero(), &ShearFn::zero());
    assert!(!zero.pass);
    let plan = plan_finite_avoidance(&pts, DELTA).unwrap();
    assert!(plan.certificate.pass);
    assert!(plan.g2.bound() > 0.0 && plan.g2.bound() < PI / 2.0);
}

#[test]
fn certificate_pass_excludes_critical_points() {
    let mut pts = vec![(0.7, 2.0), (1.9, 2.5), (2.6, PI - 0.2)];
    pts.extend(abelian_line(120));
    let plan = plan_finite_avoidance(&pts, DELTA).unwrap();
    let s = PillowSet::from_coords(&pts, DELTA, "s").symmetrized();
    let matches =
        enumerate_critical_points(&s, &s, &plan.g1, &plan.g2, plan.certificate.margin / 2.0);
    assert!(matches.is_empty());
}

#[test]
fn constructed_matches_are_found() {
    let g1 = ShearFn::from_knots(vec![(0.0, 0.0), (1.0, 0.2), (PI, 0.0)]).unwrap();
    let g2 = ShearFn::from_knots(vec![(0.0, 0.0), (0.5, -0.3), (PI, 0.0)]).unwrap();
    let p1 = PillowSet::from_coords(&[(0.5, 1.0), (-0.5, -1.0)], DELTA, "p1");
    // P₂ + (0, π) = (P₁ + (g₁, *)) + (*, g₂).
    let p2c: Vec<(f64, f64)> = p1
        .coords()
        .iter()
        .map(|&p| {
            let t = shear_both(p, &g1, &g2);
            (t.0, t.1 - PI)
        })
        .collect();
    let p2 = PillowSet::from_coords(&p2c, DELTA, "p2");
    let matches = enumerate_critical_points(&p1, &p2, &g1, &g2, 1e-9);
    // Each point of P₁ matches through its own branch and, by symmetry, the
    // mirror branch of the other point.
    assert_eq!(matches.len(), 4);
    for m in &matches {
        assert!(m.residual < 1e-9);
        assert!(chain_violation(m, &g1, &g2) < 1e-9);
    }
}

#[test]
fn unknot_sets_have_no_critical_points() {
    let s = PillowSet::from_coords(&abelian_line(64), TAU / 64.0, "u");
    assert!(enumerate_critical_points(&s, &s, &ShearFn::zero(), &ShearFn::zero(), 0.1).is_empty());
}

#[test]
fn slice_path_for_unknot() {
    // S_K of the unknot is the line η = π.
    let s: Vec<(f64, f64)> = abelian_line(360)
        .into_iter()
        .map(|(t, _)| (t, PI))
        .collect();
    let s = PillowSet::from_coords(&s, DELTA, "unknot");
    let plan = plan_slice_path(&s, 1.5 * PI).unwrap();
    assert!((plan.corridor - PI / 2.0).abs() < 1e-12);
    assert!(plan.margin > 0.0);
    for x in [0.0, PI, -PI] {
        assert!(plan.g.eval(x).abs() < 1e-15);
    }
    assert!((plan.g.eval(PI / 2.0) - PI / 2.0).abs() < 1e-12);
}

#[test]
fn slice_path_reflects_small_eta0() {
    let s = PillowSet::from_coords(&[(1.0, 2.5), (-1.0, -2.5)], DELTA, "two");
    let a = plan_slice_path(&s, 0.5 * PI).unwrap();
    let b = plan_slice_path(&s, 1.5 * PI).unwrap();
    assert_eq!(a.eta0, b.eta0);
    assert_eq!(a.g, b.g);
}

#[test]
fn slice_path_blocked_and_narrow() {
    let s = PillowSet::from_coords(&[(1.0, 0.5)], DELTA, "one");
    assert!(matches!(
        plan_slice_path(&s, PI + 0.5),
        Err(PerturbError::SliceBlocked { .. })
    ));
    let s = PillowSet::from_coords(&[(0.01, 0.2)], DELTA, "near c3");
    assert!(matches!(
        plan_slice_path(&s, PI + 1.0),
        Err(PerturbError::CorridorTooNarrow { .. })
    ));
}
