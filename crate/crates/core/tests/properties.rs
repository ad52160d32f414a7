use knotapoly::perturb::{check_certificate, enumerate_critical_points, ShearFn};
use knotapoly::pillowcase::PillowSet;
use knotapoly::polyalg::{roots_univar, squarefree, IntPoly2};
use knotapoly::slicecheck::check_all_slices;
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::{PI, TAU};

fn shear() -> impl Strategy<Value = ShearFn> {
    prop::collection::vec((0.05f64..1.0, -1.0f64..1.0), 1..6).prop_map(|steps| {
        let total: f64 = steps.iter().map(|s| s.0).sum::<f64>() + 0.05;
        let mut x = 0.0;
        let mut knots = vec![(0.0, 0.0)];
        for (dx, v) in steps {
            x += dx / total * PI;
            knots.push((x, v));
        }
        knots.push((PI, 0.0));
        ShearFn::from_knots(knots).unwrap()
    })
}

fn points() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0.0f64..TAU, 0.0f64..TAU), 0..12)
}

fn small_poly() -> impl Strategy<Value = IntPoly2> {
    prop::collection::vec((0u32..4, 0u32..3, -5i64..=5), 1..6)
        .prop_map(|t| IntPoly2::from_i64_terms(&t))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_reexpand(coeffs in prop::collection::vec(-20i64..=20, 2..9)) {
        prop_assume!(*coeffs.last().unwrap() != 0);
        let c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect();
        let roots = roots_univar(&c, 1e-6).unwrap();
        prop_assert_eq!(roots.len(), c.len() - 1);
        let mut prod = vec![c[c.len() - 1]];
        for z in roots.values() {
            let mut next = vec![Complex64::new(0.0, 0.0); prod.len() + 1];
            for (i, a) in prod.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * z;
            }
            prod = next;
        }
        let scale = coeffs.iter().map(|x| x.abs() as f64).sum::<f64>();
        for (a, b) in prod.iter().zip(&c) {
            prop_assert!((a - b).norm() < 1e-4 * scale, "{} vs {}", a, b);
        }
    }

    #[test]
    fn squarefree_is_idempotent(p in small_poly(), q in small_poly()) {
        let f = p.mul(&p).mul(&q);
        let s = squarefree(&f);
        prop_assert_eq!(squarefree(&s), s.clone());
        prop_assert!(f.div_exact(&s).is_some());
    }

    #[test]
    fn shear_is_odd_and_periodic(g in shear(), x in -10.0f64..10.0) {
        prop_assert!((g.eval(-x) + g.eval(x)).abs() < 1e-12);
        prop_assert!((g.eval(x + TAU) - g.eval(x)).abs() < 1e-12);
        prop_assert!(g.eval(x).abs() <= g.bound() + 1e-15);
        prop_assert_eq!(g.eval(0.0), 0.0);
        prop_assert!(g.eval(PI).abs() < 1e-12);
    }

    #[test]
    fn critical_count_invariant_under_negation(
        a in points(), b in points(), g1 in shear(), g2 in shear()
    ) {
        let neg = |v: &[(f64, f64)]| v.iter().map(|&(t, e)| (-t, -e)).collect::<Vec<_>>();
        let (p1, p2) = (PillowSet::from_coords(&a, 1e-3, "a"), PillowSet::from_coords(&b, 1e-3, "b"));
        let (n1, n2) = (PillowSet::from_coords(&neg(&a), 1e-3, "a"), PillowSet::from_coords(&neg(&b), 1e-3, "b"));
        let x = enumerate_critical_points(&p1, &p2, &g1, &g2, 0.3).len();
        let y = enumerate_critical_points(&n1, &n2, &g1, &g2, 0.3).len();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn certificate_ignores_sign_of_set(a in points(), g1 in shear(), g2 in shear()) {
        let neg: Vec<(f64, f64)> = a.iter().map(|&(t, e)| (-t, -e)).collect();
        let c1 = check_certificate(&PillowSet::from_coords(&a, 1e-3, "a"), &g1, &g2);
        let c2 = check_certificate(&PillowSet::from_coords(&neg, 1e-3, "a"), &g1, &g2);
        prop_assert!((c1.margin - c2.margin).abs() < 1e-12);
        prop_assert_eq!(c1.pass, c2.pass);
    }

    #[test]
    fn slice_verdict_ignores_units(p in small_poly(), c in prop::sample::select(vec![-3i64, -1, 2, 7]), k in 0u32..3) {
        let a = p.mul(&IntPoly2::l_minus_one());
        let b = a.scale(&BigInt::from(c)).shift(k, 0);
        let (ra, rb) = (check_all_slices(&a, 24, 1e-8), check_all_slices(&b, 24, 1e-8));
        prop_assert_eq!(ra.pass, rb.pass);
    }
}
