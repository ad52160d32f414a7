use knotapoly::knot::KnotRegistry;
use knotapoly::pillowcase::{compute_pillowcase, THREADS_ENV};

#[test]
fn thread_cap_does_not_change_output() {
    let p = KnotRegistry::default().resolve("5/3").unwrap();
    let reference = compute_pillowcase(&p, 60, 1e-10).unwrap().to_csv();
    for n in ["1", "3"] {
        std::env::set_var(THREADS_ENV, n);
        assert_eq!(
            compute_pillowcase(&p, 60, 1e-10).unwrap().to_csv(),
            reference
        );
    }
    std::env::remove_var(THREADS_ENV);
}
