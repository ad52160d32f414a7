//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use knotapoly::apoly::oracle::interpolated_resultant;
use knotapoly::apoly::{
    apoly, longitude_resultant, prune_resultant, reduce_presentation, rep_system_riley,
    sample_witnesses, APolyResult,
};
use knotapoly::knot::{KnotPresentation, KnotRegistry};
use knotapoly::perturb::{
    enumerate_critical_points, path_segments, plan_finite_avoidance, plan_slice_path, PerturbError,
};
use knotapoly::pillowcase::{
    check_symmetries, circle_distance, compute_pillowcase, compute_pillowcase_with, hausdorff,
    pillow_translate, torus_distance, PillowOptions, PillowSet, SolverRegistry,
};
use knotapoly::polyalg::IntPoly2;
use knotapoly::slicecheck::{check_all_slices, cross_validate, deg_m_nonzero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

const NONTRIVIAL: [&str; 4] = ["3/1", "5/3", "7/3", "torus:2,5"];
/// N = 360 grid used by the pillowcase and slice criteria.
const N: usize = 360;
const PILLOW_TOL: f64 = 1e-10;
const SLICE_TOL: f64 = 1e-8;
/// Hausdorff bound `2π/360`.
const HAUSDORFF_BOUND: f64 = TAU / 360.0;
const CONSISTENCY_TOL: f64 = 1e-6;
const CONSISTENCY_FRACTION: f64 = 0.99;
const RANDOM_SETS: usize = 20;

fn knot(spec: &str) -> KnotPresentation {
    KnotRegistry::default().resolve(spec).expect("knot spec")
}

fn a_poly(spec: &str) -> APolyResult {
    apoly(&knot(spec)).expect("A-polynomial")
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c1() -> Outcome {
    let a = a_poly("1/1");
    outcome(
        a.a_poly == IntPoly2::l_minus_one(),
        format!("apoly 1/1 = {}", a.a_poly),
    )
}

fn c2() -> Outcome {
    let mut bad = vec![];
    for k in ["1/1"].iter().chain(NONTRIVIAL.iter()) {
        if a_poly(k)
            .a_poly
            .div_exact(&IntPoly2::l_minus_one())
            .is_none()
        {
            bad.push(*k);
        }
    }
    outcome(bad.is_empty(), format!("l-1 fails to divide for {bad:?}"))
}

fn c3() -> Outcome {
    let mut notes = vec![];
    let mut pass = true;
    for k in ["3/1", "5/3"] {
        let s = rep_system_riley(&reduce_presentation(&knot(k)).unwrap()).unwrap();
        let sym = longitude_resultant(&s).unwrap();
        let num = interpolated_resultant(&s).unwrap();
        let raw_eq = sym.normalized() == num.normalized();
        let from_oracle = prune_resultant(&num, &sample_witnesses(&s)).unwrap();
        let final_eq = from_oracle.a_poly == a_poly(k).a_poly;
        pass &= raw_eq && final_eq;
        notes.push(format!("{k}: resultant {raw_eq}, a_poly {final_eq}"));
    }
    outcome(pass, notes.join("; "))
}

fn c4() -> Outcome {
    let trivial: Vec<&str> = NONTRIVIAL
        .iter()
        .copied()
        .filter(|k| a_poly(k).nontrivial_factor == IntPoly2::one())
        .collect();
    outcome(
        trivial.is_empty(),
        format!("nontrivial_factor = 1 for {trivial:?}"),
    )
}

fn c5() -> Outcome {
    let wrong: Vec<&str> = NONTRIVIAL
        .iter()
        .copied()
        .filter(|k| !deg_m_nonzero(&a_poly(k)))
        .collect();
    let unknot = deg_m_nonzero(&a_poly("1/1"));
    outcome(
        wrong.is_empty() && !unknot,
        format!("false for {wrong:?}; unknot gives {unknot}"),
    )
}

fn c6() -> Outcome {
    let neg = IntPoly2::l_minus_one().mul(&IntPoly2::from_i64_terms(&[(1, 0, 1), (0, 0, -2)]));
    let cases = [
        ("3/1", a_poly("3/1").a_poly, true),
        ("5/3", a_poly("5/3").a_poly, true),
        ("1/1", a_poly("1/1").a_poly, false),
        ("(l-1)(m-2)", neg, false),
    ];
    let mut pass = true;
    let mut notes = vec![];
    for (name, a, expect) in cases {
        let r = check_all_slices(&a, N, SLICE_TOL);
        pass &= r.pass == expect;
        notes.push(format!(
            "{name} {} (worst {:.1e})",
            if r.pass { "pass" } else { "fail" },
            r.worst()
        ));
    }
    outcome(pass, notes.join(", "))
}

fn pillow(spec: &str) -> PillowSet {
    compute_pillowcase(&knot(spec), N, PILLOW_TOL).expect("pillowcase")
}

fn c7() -> Outcome {
    let mut pass = true;
    let mut notes = vec![];
    for k in ["3/1", "5/3"] {
        let r = check_symmetries(&pillow(k), HAUSDORFF_BOUND);
        pass &= r.translation_distance < HAUSDORFF_BOUND && r.inversion_distance < HAUSDORFF_BOUND;
        notes.push(format!(
            "{k}: translation {:.1e}, inversion {:.1e}",
            r.translation_distance, r.inversion_distance
        ));
    }
    outcome(pass, notes.join("; "))
}

fn c8() -> Outcome {
    let mut pass = true;
    let mut notes = vec![];
    for k in ["3/1", "5/3"] {
        let cv = cross_validate(&a_poly(k).a_poly, &pillow(k), CONSISTENCY_TOL);
        let good = 1.0 - cv.flagged_fraction();
        pass &= cv.checked > 0 && good >= CONSISTENCY_FRACTION;
        notes.push(format!(
            "{k}: {}/{} below tol, max {:.1e}",
            cv.checked - cv.flagged.len(),
            cv.checked,
            cv.max_residual
        ));
    }
    outcome(pass, notes.join("; "))
}

fn c9() -> Outcome {
    let reg = SolverRegistry::default();
    let opts = PillowOptions {
        n_theta: N,
        tol: PILLOW_TOL,
        ..PillowOptions::default()
    };
    let mut pass = true;
    let mut notes = vec![];
    for k in ["3/1", "5/3"] {
        let p = knot(k);
        let a = compute_pillowcase_with(reg.get("quaternion").unwrap(), &p, &opts).unwrap();
        let b = compute_pillowcase_with(reg.get("riley").unwrap(), &p, &opts).unwrap();
        let d = hausdorff(&a.coords(), &b.coords());
        pass &= d < HAUSDORFF_BOUND;
        notes.push(format!("{k}: {d:.1e}"));
    }
    outcome(pass, notes.join("; "))
}

/// Random points bounded away from `(kπ, ±π)`, plus samples of the abelian
/// line for every other set.
fn random_set(rng: &mut ChaCha8Rng, i: usize) -> Vec<(f64, f64)> {
    let mut pts = vec![];
    let n = rng.gen_range(1..=10);
    while pts.len() < n {
        let p = (rng.gen_range(0.0..TAU), rng.gen_range(0.0..TAU));
        if [0.0, PI].iter().all(|&k| torus_distance(p, (k, PI)) > 0.3) {
            pts.push(p);
        }
    }
    if i % 2 == 0 {
        pts.extend((0..N).map(|k| (TAU * k as f64 / N as f64, 0.0)));
    }
    pts
}

fn c10() -> Outcome {
    let delta = TAU / N as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = vec![];
    let mut min_margin = f64::INFINITY;
    for i in 0..RANDOM_SETS {
        let pts = random_set(&mut rng, i);
        match plan_finite_avoidance(&pts, delta) {
            Ok(plan) => {
                let s = PillowSet::from_coords(&pts, delta, "random");
                let crit = enumerate_critical_points(
                    &s,
                    &s,
                    &plan.g1,
                    &plan.g2,
                    plan.certificate.margin / 2.0,
                );
                min_margin = min_margin.min(plan.certificate.margin);
                if !plan.certificate.pass || !crit.is_empty() || plan.g2.bound() >= PI / 2.0 {
                    failures.push(format!(
                        "set {i}: certificate {} with {} critical",
                        plan.certificate.pass,
                        crit.len()
                    ));
                }
            }
            Err(e) => failures.push(format!("set {i}: {e}")),
        }
    }
    let mut infeasible = 0;
    for i in 0..5 {
        let mut pts = random_set(&mut rng, i);
        pts.push((0.0, PI));
        if matches!(
            plan_finite_avoidance(&pts, delta),
            Err(PerturbError::Infeasible { .. })
        ) {
            infeasible += 1;
        }
    }
    outcome(
        failures.is_empty() && infeasible == 5,
        format!(
            "{} of {RANDOM_SETS} planned (min margin {min_margin:.3}), {infeasible}/5 with (0,pi) infeasible {}",
            RANDOM_SETS - failures.len(),
            failures.join("; ")
        ),
    )
}

fn to_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    // segments are axis-parallel; scan a fine sample along them
    (0..=2000)
        .map(|k| {
            let s = k as f64 / 2000.0;
            torus_distance(p, (a.0 + s * (b.0 - a.0), a.1 + s * (b.1 - a.1)))
        })
        .fold(f64::INFINITY, f64::min)
}

/// Checks a successful slice plan: odd, periodic, zero at `0, π`, graph
/// inside the corridor and at positive distance from `S_K`.
fn slice_plan_ok(sk: &PillowSet, eta0: f64) -> Result<f64, String> {
    let plan = plan_slice_path(sk, eta0).map_err(|e| e.to_string())?;
    let g = &plan.g;
    if g.eval(0.0) != 0.0 || g.eval(PI).abs() > 1e-12 || g.eval(-PI).abs() > 1e-12 {
        return Err("g does not vanish at 0, ±π".into());
    }
    for k in 0..50 {
        let x = -7.0 + 0.29 * k as f64;
        if (g.eval(-x) + g.eval(x)).abs() > 1e-12 || (g.eval(x + TAU) - g.eval(x)).abs() > 1e-12 {
            return Err(format!("g not odd/periodic at {x}"));
        }
    }
    let segs = path_segments(plan.height);
    let pts = sk.coords();
    let mut margin = f64::INFINITY;
    for k in 0..=1440 {
        let t = -PI + TAU * k as f64 / 1440.0;
        let q = (t, g.eval(t));
        let to_path = segs
            .iter()
            .map(|&(a, b)| to_segment(q, a, b))
            .fold(f64::INFINITY, f64::min);
        if to_path > plan.corridor + 1e-9 {
            return Err(format!("graph leaves the corridor at θ = {t}"));
        }
        for &p in &pts {
            margin = margin.min(torus_distance(q, p));
        }
    }
    if margin > 0.0 {
        Ok(margin)
    } else {
        Err("graph meets S_K".into())
    }
}

fn c11() -> Outcome {
    let mut notes = vec![];
    let mut pass = true;
    let unknot = pillow_translate(&pillow("1/1"), 0.0, -PI);
    match slice_plan_ok(&unknot, 1.5 * PI) {
        Ok(m) => notes.push(format!("unknot margin {m:.3}")),
        Err(e) => {
            pass = false;
            notes.push(format!("unknot: {e}"));
        }
    }
    let delta = TAU / N as f64;
    for (i, pair) in [
        [(1.0, 0.3), (4.0, 5.5)],
        [(2.5, 2.0), (5.0, 4.5)],
        [(0.5, 3.0), (3.5, 3.3)],
    ]
    .iter()
    .enumerate()
    {
        let s = PillowSet::from_coords(pair, delta, "pair");
        match slice_plan_ok(&s, 4.0) {
            Ok(m) => notes.push(format!("pair {i} margin {m:.3}")),
            Err(e) => {
                pass = false;
                notes.push(format!("pair {i}: {e}"));
            }
        }
    }
    let r = pillow("3/1");
    let on_image = r
        .irreducible_points()
        .map(|p| p.eta)
        .find(|&e| circle_distance(e, PI) > 0.3)
        .expect("trefoil has irreducible points");
    let sk = pillow_translate(&r, 0.0, -PI);
    let blocked = matches!(
        plan_slice_path(&sk, on_image),
        Err(PerturbError::SliceBlocked { .. })
    );
    pass &= blocked;
    notes.push(format!("trefoil eta0 = {on_image:.4} blocked {blocked}"));
    outcome(pass, notes.join(", "))
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_knotapoly")
}

fn run_pipeline(dir: &Path) -> Vec<(String, i32)> {
    let steps: Vec<Vec<&str>> = vec![
        vec!["apoly", "3/1", "--json", "a3.json"],
        vec!["apoly", "1/1", "--json", "a1.json"],
        vec![
            "pillowcase",
            "3/1",
            "--n",
            "360",
            "-o",
            "p3.csv",
            "--witnesses",
            "w3.json",
        ],
        vec!["pillowcase", "1/1", "--n", "360", "-o", "p1.csv"],
        vec![
            "slices", "a3.json", "--n", "360", "--tol", "1e-8", "-o", "s3.csv",
        ],
        vec!["slices", "a1.json", "--n", "360", "-o", "s1.csv"],
        vec!["validate", "a3.json", "p3.csv", "-o", "v3.json"],
        vec![
            "plan",
            "--knot",
            "1/1",
            "--eta0",
            "4.71238898038469",
            "--g-out",
            "g.json",
            "--sk-out",
            "sk1.csv",
            "-o",
            "plan1.json",
        ],
        vec!["plan", "--knot", "3/1", "--eta0", "4.0", "-o", "plan3.json"],
        vec![
            "plan",
            "--set",
            "pts.csv",
            "--g1-out",
            "g1.json",
            "--g2-out",
            "g2.json",
            "-o",
            "planf.json",
        ],
        vec![
            "certify",
            "--set",
            "pts.csv",
            "--g1",
            "g1.json",
            "--g2",
            "g2.json",
            "-o",
            "cert.json",
        ],
        vec![
            "critical",
            "--p1",
            "p3.csv",
            "--p2",
            "p3.csv",
            "--g1",
            "g1.json",
            "--g2",
            "g2.json",
            "-o",
            "crit.json",
        ],
        vec!["render", "sk1.csv", "--plan", "plan1.json", "-o", "r1.svg"],
        vec![
            "render",
            "p3.csv",
            "--overlay",
            "p1.csv",
            "--shear",
            "g1.json",
            "-o",
            "r3.svg",
        ],
    ];
    std::fs::write(
        dir.join("pts.csv"),
        "theta,eta,residual\n0.3,1.0,0\n2.0,4.0,0\n1.2,2.6,0\n",
    )
    .unwrap();
    steps
        .iter()
        .map(|args| {
            let st = Command::new(bin())
                .args(args)
                .current_dir(dir)
                .env("PILLOWCASE_THREADS", "2")
                .output()
                .expect("spawn");
            (args.join(" "), st.status.code().unwrap_or(-1))
        })
        .collect()
}

fn c12() -> Outcome {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let ra = run_pipeline(a.path());
    let rb = run_pipeline(b.path());
    let mut notes = vec![];
    let mut pass = ra == rb;
    let expected = [0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0];
    for ((cmd, code), want) in ra.iter().zip(expected) {
        if *code != want {
            pass = false;
            notes.push(format!("`{cmd}` exited {code}, expected {want}"));
        }
    }
    let mut names: Vec<String> = std::fs::read_dir(a.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    let mut differing = vec![];
    for n in &names {
        let x = std::fs::read(a.path().join(n)).unwrap();
        let y = std::fs::read(b.path().join(n)).unwrap_or_default();
        if x != y {
            differing.push(n.clone());
        }
    }
    pass &= differing.is_empty();
    notes.push(format!(
        "{} files compared, differing {differing:?}",
        names.len()
    ));
    outcome(pass, notes.join("; "))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 12] = [
        ("unknot exactness", c1, Duration::from_secs(1)),
        ("(l-1) divisibility", c2, Duration::from_secs(30)),
        ("oracle equivalence", c3, Duration::from_secs(60)),
        ("non-triviality", c4, Duration::from_secs(30)),
        ("degree corollary", c5, Duration::from_secs(30)),
        ("slice property", c6, Duration::from_secs(60)),
        ("pillowcase symmetries", c7, Duration::from_secs(120)),
        (
            "pillowcase/A-polynomial consistency",
            c8,
            Duration::from_secs(60),
        ),
        ("cross-method agreement", c9, Duration::from_secs(120)),
        ("finite-set planner soundness", c10, Duration::from_secs(30)),
        ("slice-path planner", c11, Duration::from_secs(30)),
        ("CLI determinism", c12, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let ok = o.pass && took <= *budget;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<38} {}  [{:.2}s of {}s] {}",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs(),
            o.detail
        );
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
