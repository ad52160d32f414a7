//! Fixed-format numbers and deterministic file output.

use knotapoly::perturb::ShearFn;
use knotapoly::pillowcase::PillowSet;
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;

/// `x` with 17 significant digits; non-finite values become strings.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        serde_json::from_str(&format!("{x:.16e}")).expect("formatted float parses")
    } else {
        Value::String(format!("{x}"))
    }
}

pub fn pair(p: (f64, f64)) -> Value {
    json!([num(p.0), num(p.1)])
}

pub fn shear_value(g: &ShearFn) -> Value {
    json!({
        "knots": g.knots().iter().map(|&k| pair(k)).collect::<Vec<_>>(),
        "lipschitz": num(g.lipschitz()),
    })
}

pub fn witnesses_value(s: &PillowSet) -> Value {
    let points: Vec<Value> = s
        .points
        .iter()
        .map(|p| {
            json!({
                "theta": num(p.theta),
                "eta": num(p.eta),
                "residual": num(p.residual),
                "witness": p.witness.iter().map(|q| json!([num(q.w), num(q.x), num(q.y), num(q.z)])).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "label": s.label,
        "theta_grid": s.theta_grid,
        "delta": num(s.delta),
        "points": points,
    })
}

pub fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Writes to `path`, or to standard output when `path` is `None` or `-`.
pub fn emit(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::write(p, text),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(num(0.1).to_string(), "1.0000000000000001e-1");
        assert_eq!(num(-3.0).to_string(), "-3.0000000000000000e+0");
        assert_eq!(num(f64::INFINITY), Value::String("inf".into()));
    }

    #[test]
    fn shear_document_reads_back() {
        let g =
            ShearFn::from_knots(vec![(0.0, 0.0), (1.0, 0.5), (std::f64::consts::PI, 0.0)]).unwrap();
        let doc: knotapoly::perturb::ShearJson = serde_json::from_value(shear_value(&g)).unwrap();
        let back = ShearFn::from_json(&doc).unwrap();
        assert_eq!(back.knots(), g.knots());
    }
}
