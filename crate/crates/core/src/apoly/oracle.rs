//! Evaluation–interpolation resultant, an independent check on
//! [`longitude_resultant`](super::longitude_resultant).
//!
//! At each `m₀` on a rotated set of roots of unity the Riley polynomial is
//! solved numerically and `res_t(G, l·D − r)` is formed through the Poisson
//! product `lc(G)^{deg r} · ∏ (l·D(m₀) − r(m₀, tᵢ))`. An inverse DFT in `m`
//! followed by rounding recovers the integer coefficients.

use super::eliminate::longitude_relation;
use super::riley::{coeffs_in_t, eval_bipoly, RepSystem};
use super::ApolyError;
use crate::polyalg::{roots_univar, IntPoly2};
use num_bigint::BigInt;
use num_complex::Complex64;
use std::f64::consts::PI;

const ROOT_TOL: f64 = 1e-8;
/// Largest admissible distance from the nearest integer after interpolation.
pub const ROUNDING_SLACK: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    Apoly(ApolyError),
    RootFailure { m: Complex64 },
    NotInteger { dm: u32, dl: u32, value: f64 },
}

fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn interpolated_resultant(s: &RepSystem) -> Result<IntPoly2, OracleError> {
    let Some(g) = s.riley_polynomial() else {
        return Ok(IntPoly2::l_minus_one());
    };
    let (d, r) = longitude_relation(s, g);
    let dg = g.deg_y().unwrap_or(0);
    let de = r.deg_y().unwrap_or(0);
    let deg_m_e = d.degree().unwrap_or(0).max(r.deg_x().unwrap_or(0));
    let bound = dg * deg_m_e + de * g.deg_x().unwrap_or(0);
    let n = bound + 1;
    let phase = 0.37 / n as f64;
    let mut samples: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for j in 0..n {
        let m = Complex64::from_polar(1.0, 2.0 * PI * (j as f64 / n as f64 + phase));
        let gt = coeffs_in_t(g, m);
        let roots = roots_univar(&gt, ROOT_TOL).map_err(|_| OracleError::RootFailure { m })?;
        let dm = d.eval_complex(m);
        let lc = gt.last().copied().unwrap_or_default();
        let mut poly = vec![lc.powu(de as u32)];
        for root in &roots.roots {
            let ri = if de == 0 {
                eval_bipoly(&r, m, Complex64::new(0.0, 0.0))
            } else {
                eval_bipoly(&r, m, root.value)
            };
            poly = poly_mul(&poly, &[-ri, dm]);
        }
        samples.push(poly);
    }
    let mut terms = vec![];
    for dl in 0..=dg {
        for dm in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, poly) in samples.iter().enumerate() {
                let m = Complex64::from_polar(1.0, 2.0 * PI * (j as f64 / n as f64 + phase));
                acc += poly[dl] * m.powi(-(dm as i32));
            }
            let v = acc.re / n as f64;
            let rounded = v.round();
            if (v - rounded).abs() > ROUNDING_SLACK || (acc.im / n as f64).abs() > ROUNDING_SLACK {
                return Err(OracleError::NotInteger {
                    dm: dm as u32,
                    dl: dl as u32,
                    value: v,
                });
            }
            if rounded != 0.0 {
                terms.push((dm as u32, dl as u32, BigInt::from(rounded as i64)));
            }
        }
    }
    Ok(IntPoly2::from_terms(terms))
}
