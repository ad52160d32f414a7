//! Elimination of the Riley parameter and extraneous-factor pruning.

use super::riley::{bipoly_to_mpoly, coeffs_in_t, RepSystem};
use super::{APolyResult, ApolyError};
use crate::polyalg::{divide_out, resultant, roots_univar, squarefree, BiPoly, IntPoly2, UPoly};
use num_complex::Complex64;

/// Refuse elimination above this `t`-degree.
pub const MAX_T_DEGREE: usize = 64;

const WITNESS_TOL: f64 = 1e-8;

/// A numerically solved representation `(m, t)` with its longitude eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Witness {
    pub m: Complex64,
    pub t: Complex64,
    pub l: Complex64,
}

/// Sample points `m₀` off the unit circle and away from roots of unity.
const WITNESS_M: [(f64, f64); 4] = [(1.17, 0.31), (0.83, 1.13), (1.41, 2.03), (0.67, -0.59)];

/// Solves the Riley equation at a few fixed `m₀` values.
pub fn sample_witnesses(s: &RepSystem) -> Vec<Witness> {
    let Some(g) = s.riley_polynomial() else {
        return vec![];
    };
    let mut out = vec![];
    for &(r, phi) in &WITNESS_M {
        let m = Complex64::from_polar(r, phi);
        let Ok(roots) = roots_univar(&coeffs_in_t(g, m), WITNESS_TOL) else {
            continue;
        };
        for root in &roots.roots {
            let t = root.value;
            if t.norm() < 1e-9 {
                continue;
            }
            out.push(Witness {
                m,
                t,
                l: s.longitude_value(m, t),
            });
        }
    }
    out
}

/// `E = l·lc(G)^e·m^k − r` where `lc(G)^e · N ≡ r (mod G)`; `E` vanishes on
/// the graph of the longitude eigenvalue over `G = 0`. Returns `(D, r)` with
/// `E = l·D − r`.
pub(crate) fn longitude_relation(s: &RepSystem, g: &BiPoly) -> (UPoly, BiPoly) {
    let num = s.longitude_entry();
    let dg = g.deg_y().unwrap_or(0);
    let e = num
        .deg_y()
        .map_or(0, |dn| if dn >= dg { dn - dg + 1 } else { 0 });
    let r = num.pseudo_rem(g);
    let d = g.lc().pow(e as u32).shift(s.longitude_length());
    (d, r)
}

/// `res_t(G, l·D − r)` computed symbolically by Bareiss elimination.
pub fn longitude_resultant(s: &RepSystem) -> Result<IntPoly2, ApolyError> {
    let Some(g) = s.riley_polynomial() else {
        return Ok(IntPoly2::l_minus_one());
    };
    let dg = g.deg_y().unwrap_or(0);
    if dg > MAX_T_DEGREE {
        return Err(ApolyError::EliminationOverflow { degree: dg });
    }
    let (d, r) = longitude_relation(s, g);
    let vars = ["m", "l", "t"];
    let gm = bipoly_to_mpoly(g, &vars, "m", "t");
    let rm = bipoly_to_mpoly(&r, &vars, "m", "t");
    let dm = bipoly_to_mpoly(&BiPoly::from_coeffs(vec![d]), &vars, "m", "t");
    let l = crate::polyalg::MPoly::var(&vars, "l").expect("l is a variable");
    let e = l.mul(&dm).sub(&rm);
    let res = resultant(&gm, &e, "t").map_err(|_| ApolyError::EmptySystem)?;
    let mi = res.var_index("m").ok();
    let li = res.var_index("l").ok();
    Ok(IntPoly2::from_terms(
        res.clear_denominators()
            .into_iter()
            .map(|(ex, c)| (mi.map_or(0, |i| ex[i]), li.map_or(0, |i| ex[i]), c)),
    ))
}

fn vanishes_somewhere(p: &IntPoly2, witnesses: &[Witness]) -> bool {
    witnesses
        .iter()
        .any(|w| p.relative_residual(w.m, w.l) < WITNESS_TOL)
}

fn upoly_l_minus_one() -> UPoly {
    UPoly::from_i64(&[-1, 1])
}

/// Turns a raw resultant into the A-polynomial: strips the content in `m`,
/// takes the square-free part, drops factors missed by every witness and
/// makes sure `l − 1` divides the result.
pub fn prune_resultant(raw: &IntPoly2, witnesses: &[Witness]) -> Result<APolyResult, ApolyError> {
    let mut log = vec![];
    if raw.is_zero() {
        return Err(ApolyError::EmptySystem);
    }
    let cm = raw.content_in_m();
    let mut p = raw.clone();
    if cm.degree().unwrap_or(0) > 0 {
        log.push(format!("removed content in m: {cm}"));
        p = p
            .div_exact(&IntPoly2::from_upoly_m(&cm))
            .expect("content divides");
    }
    p = squarefree(&p);
    let cl = p.content_in_l();
    let core = p
        .div_exact(&IntPoly2::from_upoly_l(&cl))
        .expect("content divides");
    let mut l_part = cl.primitive();
    while let Some(q) = l_part.div_exact(&upoly_l_minus_one()) {
        l_part = q;
    }
    let mut kept = IntPoly2::one();
    for (name, block) in [
        ("m-dependent", core),
        ("m-free", IntPoly2::from_upoly_l(&l_part)),
    ] {
        if block.is_constant() {
            continue;
        }
        if witnesses.is_empty() || vanishes_somewhere(&block, witnesses) {
            kept = kept.mul(&block);
        } else {
            log.push(format!("dropped {name} factor {block}: no witness on it"));
        }
    }
    let (_, has) = divide_out(&kept, &IntPoly2::l_minus_one());
    if !has {
        kept = kept.mul(&IntPoly2::l_minus_one());
    }
    let a_poly = squarefree(&kept).normalized();
    let (nontrivial, exact) = divide_out(&a_poly, &IntPoly2::l_minus_one());
    debug_assert!(exact);
    log.push(format!("witnesses: {}", witnesses.len()));
    Ok(APolyResult {
        a_poly,
        nontrivial_factor: nontrivial.normalized(),
        diagnostics: log,
    })
}

pub fn eliminate_to_apoly(s: &RepSystem) -> Result<APolyResult, ApolyError> {
    if s.variables().is_empty() {
        return Err(ApolyError::EmptySystem);
    }
    if s.riley_polynomial().is_none() {
        // Only abelian representations: the longitude is trivial.
        return Ok(APolyResult {
            a_poly: IntPoly2::l_minus_one(),
            nontrivial_factor: IntPoly2::one(),
            diagnostics: vec!["no non-abelian representations".into()],
        });
    }
    let raw = longitude_resultant(s)?;
    let witnesses = sample_witnesses(s);
    prune_resultant(&raw, &witnesses)
}
