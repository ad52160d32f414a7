//! `--config` documents. Every field is optional; command-line flags win.

use serde::Deserialize;
use std::path::Path;

pub const MIN_GRID: usize = 8;
pub const MAX_GRID: usize = 100_000;

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Used when no subcommand is given on the command line.
    pub subcommand: Option<String>,
    pub knot: Option<String>,
    /// Positional file arguments for the subcommand.
    #[serde(default)]
    pub inputs: Vec<String>,
    pub output: Option<String>,
    pub n_theta: Option<usize>,
    pub n_slices: Option<usize>,
    pub tol: Option<f64>,
    pub seeds: Option<usize>,
    pub solver: Option<String>,
    pub delta: Option<f64>,
    pub eta0: Option<f64>,
    pub width: Option<u32>,
    pub height: Option<u32>,
    pub point_radius: Option<f64>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let cfg: Self =
            serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [("n_theta", self.n_theta), ("n_slices", self.n_slices)] {
            if let Some(n) = v {
                check_grid(name, n)?;
            }
        }
        for (name, v) in [
            ("tol", self.tol),
            ("delta", self.delta),
            ("point_radius", self.point_radius),
        ] {
            if let Some(x) = v {
                check_positive(name, x)?;
            }
        }
        Ok(())
    }

    /// Reconstructs an argument vector from `subcommand`, `knot`, `inputs`
    /// and `output`.
    pub fn argv(&self) -> Option<Vec<String>> {
        let sub = self.subcommand.clone()?;
        let mut out = vec!["knotapoly".to_string(), sub.clone()];
        if let Some(k) = &self.knot {
            if sub == "plan" {
                out.push("--knot".into());
            }
            out.push(k.clone());
        }
        out.extend(self.inputs.iter().cloned());
        if let Some(o) = &self.output {
            out.push(if sub == "apoly" { "--json" } else { "--output" }.into());
            out.push(o.clone());
        }
        Some(out)
    }
}

pub fn check_grid(name: &str, n: usize) -> Result<(), String> {
    if (MIN_GRID..=MAX_GRID).contains(&n) {
        Ok(())
    } else {
        Err(format!("{name} = {n} is outside [{MIN_GRID}, {MAX_GRID}]"))
    }
}

pub fn check_positive(name: &str, x: f64) -> Result<(), String> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(format!("{name} must be positive and finite, got {x}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        let c: RunConfig = serde_json::from_str(r#"{"n_theta": 4}"#).unwrap();
        assert!(c.validate().is_err());
        let c: RunConfig = serde_json::from_str(r#"{"tol": -1e-3}"#).unwrap();
        assert!(c.validate().is_err());
        let c: RunConfig = serde_json::from_str(r#"{"n_theta": 360, "tol": 1e-9}"#).unwrap();
        assert!(c.validate().is_ok());
        assert!(serde_json::from_str::<RunConfig>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn argv_from_config() {
        let c = RunConfig {
            subcommand: Some("plan".into()),
            knot: Some("3/1".into()),
            output: Some("p.json".into()),
            ..Default::default()
        };
        assert_eq!(
            c.argv().unwrap(),
            ["knotapoly", "plan", "--knot", "3/1", "--output", "p.json"]
        );
    }
}
