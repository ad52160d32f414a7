//! Subcommand bodies. Each returns the verdict or an error carrying its
//! exit code class.

use crate::config::{check_grid, check_positive, RunConfig};
use crate::output::{emit, num, pair, shear_value, to_json_text, witnesses_value};
use crate::render::{render_pillowcase, Overlays, PathOverlay, RenderOptions};
use crate::{CliError, Command, GridArgs, Verdict};
use knotapoly::apoly::apoly;
use knotapoly::knot::{KnotPresentation, KnotRegistry};
use knotapoly::perturb::{
    chain_violation, check_certificate, enumerate_critical_points, path_segments,
    plan_finite_avoidance, plan_slice_path, Certificate, PerturbError, ShearFn, ShearJson,
};
use knotapoly::pillowcase::{
    compute_pillowcase_with, pillow_translate, PillowError, PillowOptions, PillowSet,
    SolverRegistry,
};
use knotapoly::polyalg::{IntPoly2, IntPoly2Json};
use knotapoly::slicecheck::{check_all_slices, cross_validate};
use serde_json::{json, Value};
use std::f64::consts::{PI, TAU};
use std::path::{Path, PathBuf};

const DEFAULT_N_THETA: usize = 360;
const DEFAULT_N_SLICES: usize = 360;
const DEFAULT_PILLOW_TOL: f64 = 1e-10;
const DEFAULT_SLICE_TOL: f64 = 1e-8;
const DEFAULT_VALIDATE_TOL: f64 = 1e-6;
const DEFAULT_SOLVER: &str = "quaternion";

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    emit(path, text).map_err(|e| compute(format!("writing output: {e}")))
}

fn write_file(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write(Some(p), text),
        None => Ok(()),
    }
}

fn resolve_knot(spec: &str) -> Result<KnotPresentation, CliError> {
    KnotRegistry::default().resolve(spec).map_err(usage)
}

fn pillow_error(e: PillowError) -> CliError {
    match e {
        PillowError::UnknownSolver(_) | PillowError::InvalidGrid(_) => usage(e),
        _ => compute(e),
    }
}

fn grid(
    name: &str,
    flag: Option<usize>,
    cfg: Option<usize>,
    default: usize,
) -> Result<usize, CliError> {
    let n = flag.or(cfg).unwrap_or(default);
    check_grid(name, n).map_err(usage)?;
    Ok(n)
}

fn positive(
    name: &str,
    flag: Option<f64>,
    cfg: Option<f64>,
    default: f64,
) -> Result<f64, CliError> {
    let x = flag.or(cfg).unwrap_or(default);
    check_positive(name, x).map_err(usage)?;
    Ok(x)
}

fn pillow_options(g: &GridArgs, cfg: &RunConfig) -> Result<(PillowOptions, String), CliError> {
    let opts = PillowOptions {
        n_theta: grid("n", g.n, cfg.n_theta, DEFAULT_N_THETA)?,
        tol: positive("tol", g.tol, cfg.tol, DEFAULT_PILLOW_TOL)?,
        n_seeds: g
            .seeds
            .or(cfg.seeds)
            .unwrap_or(PillowOptions::default().n_seeds),
    };
    if opts.n_seeds < 8 {
        return Err(usage(format!("seeds = {} is below 8", opts.n_seeds)));
    }
    let solver = g
        .solver
        .clone()
        .or_else(|| cfg.solver.clone())
        .unwrap_or_else(|| DEFAULT_SOLVER.to_string());
    Ok((opts, solver))
}

fn pillowcase_of(spec: &str, g: &GridArgs, cfg: &RunConfig) -> Result<PillowSet, CliError> {
    let p = resolve_knot(spec)?;
    let (opts, solver) = pillow_options(g, cfg)?;
    let reg = SolverRegistry::default();
    let s = reg.get(&solver).map_err(pillow_error)?;
    compute_pillowcase_with(s, &p, &opts).map_err(pillow_error)
}

/// `δ` for a CSV input: explicit, else `2π/n`.
fn set_delta(delta: Option<f64>, n: Option<usize>, cfg: &RunConfig) -> Result<f64, CliError> {
    match delta.or(cfg.delta) {
        Some(d) => positive("delta", Some(d), None, d),
        None => Ok(TAU / grid("n", n, cfg.n_theta, DEFAULT_N_THETA)? as f64),
    }
}

fn read_set(path: &Path, delta: f64) -> Result<PillowSet, CliError> {
    let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or("set");
    PillowSet::from_csv(&read(path)?, delta, label)
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_shear(path: &Path) -> Result<ShearFn, CliError> {
    let doc: ShearJson = serde_json::from_str(&read(path)?)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    ShearFn::from_json(&doc).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_apoly(path: &Path) -> Result<IntPoly2, CliError> {
    let doc: IntPoly2Json = serde_json::from_str(&read(path)?)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    IntPoly2::from_json(&doc).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn certificate_value(c: &Certificate) -> Value {
    json!({
        "margin": num(c.margin),
        "delta": num(c.delta),
        "lipschitz": num(c.lipschitz),
        "threshold": num(c.threshold()),
        "pass": c.pass,
        "context": c.context,
        "closest": c.closest.map(|(a, b)| json!([pair(a), pair(b)])),
    })
}

fn points_value(v: &[(f64, f64)]) -> Value {
    Value::Array(v.iter().map(|&p| pair(p)).collect())
}

pub fn dispatch(cmd: Command, cfg: &RunConfig) -> Verdict {
    match cmd {
        Command::Apoly { knot, json } => cmd_apoly(&knot, json),
        Command::Pillowcase {
            knot,
            grid,
            output,
            witnesses,
        } => cmd_pillowcase(&knot, &grid, output, witnesses, cfg),
        Command::Plan {
            knot,
            set,
            eta0,
            grid,
            delta,
            g_out,
            g1_out,
            g2_out,
            sk_out,
            output,
        } => {
            let r = match (knot.or_else(|| cfg.knot.clone()), set) {
                (Some(k), None) => pillowcase_of(&k, &grid, cfg)?,
                (None, Some(p)) => read_set(&p, set_delta(delta, grid.n, cfg)?)?,
                _ => return Err(usage("plan needs exactly one of --knot and --set")),
            };
            match eta0.or(cfg.eta0) {
                Some(e) => cmd_plan_slice(&r, e, g_out, sk_out, output),
                None => cmd_plan_finite(&r, g1_out, g2_out, output),
            }
        }
        Command::Certify {
            set,
            g1,
            g2,
            delta,
            n,
            output,
        } => {
            let s = read_set(&set, set_delta(delta, n, cfg)?)?;
            let c = check_certificate(&s, &read_shear(&g1)?, &read_shear(&g2)?);
            write(output.as_deref(), &to_json_text(&certificate_value(&c)))?;
            eprintln!(
                "certificate: margin {:e}, threshold {:e}, {}",
                c.margin,
                c.threshold(),
                verdict_word(c.pass)
            );
            Ok(c.pass)
        }
        Command::Critical {
            p1,
            p2,
            g1,
            g2,
            tol,
            delta,
            n,
            output,
        } => {
            let d = set_delta(delta, n, cfg)?;
            let tol = positive("tol", tol, cfg.tol, d)?;
            let (a, b) = (read_set(&p1, d)?, read_set(&p2, d)?);
            let (g1, g2) = (read_shear(&g1)?, read_shear(&g2)?);
            let matches = enumerate_critical_points(&a, &b, &g1, &g2, tol);
            let list: Vec<Value> = matches
                .iter()
                .map(|m| {
                    json!({
                        "point_minus1": pair(m.point_minus1),
                        "point_0": pair(m.point_0),
                        "point_hat0": pair(m.point_hat0),
                        "point_1": pair(m.point_1),
                        "target": pair(m.target),
                        "sign": m.sign,
                        "residual": num(m.residual),
                        "chain_violation": num(chain_violation(m, &g1, &g2)),
                    })
                })
                .collect();
            let doc = json!({"tol": num(tol), "count": list.len(), "matches": list});
            write(output.as_deref(), &to_json_text(&doc))?;
            eprintln!("critical: {} chain(s) within {tol:e}", matches.len());
            Ok(true)
        }
        Command::Slices {
            apoly,
            n,
            tol,
            output,
        } => {
            let a = read_apoly(&apoly)?;
            let n = grid("n", n, cfg.n_slices, DEFAULT_N_SLICES)?;
            let tol = positive("tol", tol, cfg.tol, DEFAULT_SLICE_TOL)?;
            let rep = check_all_slices(&a, n, tol);
            write(output.as_deref(), &rep.to_csv())?;
            eprintln!(
                "slices: {} ({} of {n} slices fail, worst {:e}, tol {tol:e})",
                verdict_word(rep.pass),
                rep.failing().count(),
                rep.worst()
            );
            Ok(rep.pass)
        }
        Command::Validate {
            apoly,
            pillowcase,
            tol,
            delta,
            n,
            output,
        } => {
            let a = read_apoly(&apoly)?;
            let s = read_set(&pillowcase, set_delta(delta, n, cfg)?)?;
            let tol = positive("tol", tol, cfg.tol, DEFAULT_VALIDATE_TOL)?;
            let cv = cross_validate(&a, &s, tol);
            let flagged: Vec<Value> = cv
                .flagged
                .iter()
                .map(|f| json!({"theta": num(f.theta), "eta": num(f.eta), "residual": num(f.residual)}))
                .collect();
            let doc = json!({
                "checked": cv.checked,
                "flagged": flagged,
                "flagged_fraction": num(cv.flagged_fraction()),
                "max_residual": num(cv.max_residual),
                "tol": num(tol),
                "pass": cv.pass,
            });
            write(output.as_deref(), &to_json_text(&doc))?;
            eprintln!(
                "validate: {} ({} of {} points flagged)",
                verdict_word(cv.pass),
                cv.flagged.len(),
                cv.checked
            );
            Ok(cv.pass)
        }
        Command::Render {
            set,
            output,
            overlay,
            shear,
            plan,
            width,
            height,
            radius,
        } => {
            let d = set_delta(None, None, cfg)?;
            let s = read_set(&set, d)?;
            let mut ov = Overlays::default();
            if let Some(o) = overlay {
                ov.second_set = read_set(&o, d)?.coords();
            }
            for g in &shear {
                ov.shears.push(read_shear(g)?);
            }
            if let Some(p) = plan {
                let (path, g) = read_plan(&p)?;
                ov.path = Some(path);
                ov.shears.push(g);
            }
            let def = RenderOptions::default();
            let opts = RenderOptions {
                width: width.or(cfg.width).unwrap_or(def.width),
                height: height.or(cfg.height).unwrap_or(def.height),
                point_radius: positive("radius", radius, cfg.point_radius, def.point_radius)?,
            };
            if opts.width < 160 || opts.height < 160 {
                return Err(usage("width and height must be at least 160"));
            }
            write(
                output.as_deref(),
                &render_pillowcase(&s.coords(), &ov, &opts),
            )?;
            Ok(true)
        }
    }
}

fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn cmd_apoly(spec: &str, json_out: Option<PathBuf>) -> Verdict {
    let p = resolve_knot(spec)?;
    let r = apoly(&p).map_err(compute)?;
    for d in &r.diagnostics {
        log::info!("{d}");
    }
    write(None, &format!("{}\n", r.factored()))?;
    write_file(&json_out, &to_json_text(&r.to_json_value()))?;
    Ok(true)
}

fn cmd_pillowcase(
    spec: &str,
    g: &GridArgs,
    output: Option<PathBuf>,
    witnesses: Option<PathBuf>,
    cfg: &RunConfig,
) -> Verdict {
    let s = pillowcase_of(spec, g, cfg)?;
    write(output.as_deref(), &s.to_csv())?;
    write_file(&witnesses, &to_json_text(&witnesses_value(&s)))?;
    eprintln!(
        "pillowcase {}: {} points ({} irreducible), N = {}",
        s.label,
        s.len(),
        s.irreducible_points().count(),
        s.theta_grid
    );
    Ok(true)
}

fn cmd_plan_slice(
    r: &PillowSet,
    eta0: f64,
    g_out: Option<PathBuf>,
    sk_out: Option<PathBuf>,
    output: Option<PathBuf>,
) -> Verdict {
    let sk = pillow_translate(r, 0.0, -PI);
    write_file(&sk_out, &sk.to_csv())?;
    let (doc, pass) = match plan_slice_path(&sk, eta0) {
        Ok(plan) => {
            write_file(&g_out, &to_json_text(&shear_value(&plan.g)))?;
            let segs: Vec<Value> = path_segments(plan.height)
                .into_iter()
                .map(|(a, b)| json!([pair(a), pair(b)]))
                .collect();
            let doc = json!({
                "mode": "slice-path",
                "label": r.label,
                "pass": true,
                "eta0": num(plan.eta0),
                "height": num(plan.height),
                "corridor": num(plan.corridor),
                "margin": num(plan.margin),
                "delta": num(sk.delta),
                "segments": segs,
                "g": shear_value(&plan.g),
            });
            eprintln!(
                "plan: corridor {:e}, margin {:e}",
                plan.corridor, plan.margin
            );
            (doc, true)
        }
        Err(e) => (plan_failure("slice-path", r, &e), false),
    };
    write(output.as_deref(), &to_json_text(&doc))?;
    Ok(pass)
}

fn cmd_plan_finite(
    r: &PillowSet,
    g1_out: Option<PathBuf>,
    g2_out: Option<PathBuf>,
    output: Option<PathBuf>,
) -> Verdict {
    let (doc, pass) = match plan_finite_avoidance(&r.coords(), r.delta) {
        Ok(plan) => {
            write_file(&g1_out, &to_json_text(&shear_value(&plan.g1)))?;
            write_file(&g2_out, &to_json_text(&shear_value(&plan.g2)))?;
            let doc = json!({
                "mode": "finite-avoidance",
                "label": r.label,
                "pass": plan.certificate.pass,
                "g1": shear_value(&plan.g1),
                "g2": shear_value(&plan.g2),
                "certificate": certificate_value(&plan.certificate),
            });
            eprintln!("plan: margin {:e}", plan.certificate.margin);
            (doc, plan.certificate.pass)
        }
        Err(e) => (plan_failure("finite-avoidance", r, &e), false),
    };
    write(output.as_deref(), &to_json_text(&doc))?;
    Ok(pass)
}

fn plan_failure(mode: &str, r: &PillowSet, e: &PerturbError) -> Value {
    eprintln!("plan: {e}");
    let (kind, blocking) = match e {
        PerturbError::Infeasible { blocking, .. } => ("infeasible", points_value(blocking)),
        PerturbError::SliceBlocked { blocking, .. } => ("slice-blocked", points_value(blocking)),
        PerturbError::CorridorTooNarrow { .. } => ("corridor-too-narrow", Value::Array(vec![])),
        PerturbError::InvalidShear(_) => ("invalid-shear", Value::Array(vec![])),
    };
    json!({
        "mode": mode,
        "label": r.label,
        "pass": false,
        "error": kind,
        "message": e.to_string(),
        "blocking": blocking,
    })
}

fn read_plan(path: &Path) -> Result<(PathOverlay, ShearFn), CliError> {
    let bad = |m: &str| usage(format!("{}: {m}", path.display()));
    let v: Value = serde_json::from_str(&read(path)?).map_err(|e| bad(&e.to_string()))?;
    if v["mode"] != "slice-path" || v["pass"] != true {
        return Err(bad("not a successful slice-path plan"));
    }
    let f = |k: &str| v[k].as_f64().ok_or_else(|| bad(&format!("missing `{k}`")));
    let overlay = PathOverlay {
        height: f("height")?,
        corridor: f("corridor")?,
    };
    let doc: ShearJson = serde_json::from_value(v["g"].clone()).map_err(|e| bad(&e.to_string()))?;
    let g = ShearFn::from_json(&doc).map_err(|e| bad(&e.to_string()))?;
    Ok((overlay, g))
}
