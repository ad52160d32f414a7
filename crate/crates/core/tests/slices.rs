use knotapoly::apoly::{apoly, APolyResult};
use knotapoly::knot::KnotRegistry;
use knotapoly::polyalg::IntPoly2;
use knotapoly::slicecheck::{check_all_slices, deg_m_nonzero, slice_roots};

fn a_poly(spec: &str) -> APolyResult {
    apoly(&KnotRegistry::default().resolve(spec).unwrap()).unwrap()
}

#[test]
fn figure_eight_slice_has_unit_root() {
    let a = a_poly("5/3");
    let r = slice_roots(&a.nontrivial_factor, 1.0).unwrap();
    assert!(r.min_unit_distance < 1e-8, "{}", r.min_unit_distance);
}

#[test]
fn full_sweeps() {
    for spec in ["3/1", "5/3"] {
        let rep = check_all_slices(&a_poly(spec).a_poly, 360, 1e-8);
        assert!(rep.pass, "{spec}: worst {}", rep.worst());
    }
    let u = check_all_slices(&a_poly("1/1").a_poly, 360, 1e-8);
    assert!(!u.pass);
    assert_eq!(u.failing().count(), 359);
}

#[test]
fn degree_corollary() {
    for spec in ["3/1", "5/3", "7/3", "torus:2,5"] {
        assert!(deg_m_nonzero(&a_poly(spec)), "{spec}");
    }
    assert!(!deg_m_nonzero(&a_poly("1/1")));
}

#[test]
fn conjugate_slices_mirror_roots() {
    let a = a_poly("5/3").a_poly;
    for eta in [0.4, 1.3, 2.9] {
        let r1 = slice_roots(&a, eta).unwrap().roots.values();
        let r2 = slice_roots(&a, std::f64::consts::TAU - eta)
            .unwrap()
            .roots
            .values();
        assert_eq!(r1.len(), r2.len());
        for z in &r1 {
            let d = r2
                .iter()
                .map(|w| (w - z.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(d < 1e-6, "{eta}: {z}");
        }
    }
}

#[test]
fn negative_control_fails() {
    let a = IntPoly2::l_minus_one().mul(&IntPoly2::from_i64_terms(&[(1, 0, 1), (0, 0, -2)]));
    let rep = check_all_slices(&a, 360, 1e-8);
    assert!(!rep.pass);
    assert!(rep
        .slices
        .iter()
        .skip(1)
        .all(|s| (s.min_unit_distance - 1.0).abs() < 1e-9));
}
