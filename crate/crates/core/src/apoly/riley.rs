//! Symbolic SL(2) representations in Riley normal form.

use super::ApolyError;
use crate::knot::KnotPresentation;
use crate::polyalg::{BiPoly, MPoly, UPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

/// 2×2 matrix over ℤ[m][t] (`x = m`, `y = t`).
type Mat = [[BiPoly; 2]; 2];

fn bp(terms: &[(usize, usize, i64)]) -> BiPoly {
    let owned: Vec<(usize, usize, BigInt)> = terms
        .iter()
        .map(|&(a, b, c)| (a, b, BigInt::from(c)))
        .collect();
    BiPoly::from_terms(owned.iter().map(|(a, b, c)| (*a, *b, c)))
}

/// `m·ρ(g)` for a signed generator of a two-meridian presentation.
fn scaled_letter(g: i32) -> Mat {
    match g {
        // m·a = [[m², m], [0, 1]]
        1 => [
            [bp(&[(2, 0, 1)]), bp(&[(1, 0, 1)])],
            [BiPoly::zero(), bp(&[(0, 0, 1)])],
        ],
        -1 => [
            [bp(&[(0, 0, 1)]), bp(&[(1, 0, -1)])],
            [BiPoly::zero(), bp(&[(2, 0, 1)])],
        ],
        // m·b = [[m², 0], [m t, 1]]
        2 => [
            [bp(&[(2, 0, 1)]), BiPoly::zero()],
            [bp(&[(1, 1, 1)]), bp(&[(0, 0, 1)])],
        ],
        -2 => [
            [bp(&[(0, 0, 1)]), BiPoly::zero()],
            [bp(&[(1, 1, -1)]), bp(&[(2, 0, 1)])],
        ],
        _ => unreachable!("two-generator word"),
    }
}

fn identity() -> Mat {
    [
        [bp(&[(0, 0, 1)]), BiPoly::zero()],
        [BiPoly::zero(), bp(&[(0, 0, 1)])],
    ]
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `m^len(w)·ρ(w)`.
fn scaled_word(w: &[i32]) -> Mat {
    w.iter()
        .fold(identity(), |acc, &g| mat_mul(&acc, &scaled_letter(g)))
}

fn m_power(k: usize) -> BiPoly {
    bp(&[(k, 0, 1)])
}

/// Strips factors of `t` and the content in ℤ[m].
fn reduce_riley(g: &BiPoly) -> BiPoly {
    if g.is_zero() {
        return g.clone();
    }
    let low = g.coeffs().iter().take_while(|c| c.is_zero()).count();
    let shifted = BiPoly::from_coeffs(g.coeffs()[low..].to_vec());
    shifted.primitive()
}

pub(crate) fn bipoly_to_mpoly(p: &BiPoly, vars: &[&str], x: &str, y: &str) -> MPoly {
    let xi = vars.iter().position(|v| *v == x).expect("x variable");
    let yi = vars.iter().position(|v| *v == y).expect("y variable");
    MPoly::from_terms(
        vars,
        p.terms().into_iter().map(|(a, b, c)| {
            let mut e = vec![0; vars.len()];
            e[xi] = a as u32;
            e[yi] = b as u32;
            (e, BigRational::from_integer(c))
        }),
    )
}

pub(crate) fn eval_bipoly(p: &BiPoly, m: Complex64, t: Complex64) -> Complex64 {
    coeffs_in_t(p, m)
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c)
}

/// Coefficients in `t` (ascending) after substituting `m`.
pub(crate) fn coeffs_in_t(p: &BiPoly, m: Complex64) -> Vec<Complex64> {
    p.coeffs()
        .iter()
        .map(|c: &UPoly| c.eval_complex(m))
        .collect()
}

/// Representation system of a two-meridian presentation:
/// `ρ(a) = [[m, 1], [0, m⁻¹]]`, `ρ(b) = [[m, 0], [t, m⁻¹]]`.
#[derive(Clone, Debug)]
pub struct RepSystem {
    variables: Vec<String>,
    riley: Option<BiPoly>,
    lon_num: BiPoly,
    lon_len: usize,
    label: String,
}

impl RepSystem {
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Relator equations in ℚ[m, t]; empty when only abelian
    /// representations exist.
    pub fn equations(&self) -> Vec<MPoly> {
        self.riley
            .iter()
            .map(|g| bipoly_to_mpoly(g, &["m", "t"], "m", "t"))
            .collect()
    }

    pub fn longitude_numerator(&self) -> MPoly {
        bipoly_to_mpoly(&self.lon_num, &["m", "t"], "m", "t")
    }

    pub fn longitude_denominator(&self) -> MPoly {
        bipoly_to_mpoly(&m_power(self.lon_len), &["m", "t"], "m", "t")
    }

    pub fn presentation_label(&self) -> &str {
        &self.label
    }

    /// The gcd of all relator entry equations, free of `t`-powers and of
    /// content in `m`.
    pub fn riley_polynomial(&self) -> Option<&BiPoly> {
        self.riley.as_ref()
    }

    /// `(1,1)` entry of `m^k·ρ(longitude)`.
    pub fn longitude_entry(&self) -> &BiPoly {
        &self.lon_num
    }

    /// The `k` in `l = entry / m^k`.
    pub fn longitude_length(&self) -> usize {
        self.lon_len
    }

    pub fn longitude_value(&self, m: Complex64, t: Complex64) -> Complex64 {
        eval_bipoly(&self.lon_num, m, t) / m.powu(self.lon_len as u32)
    }

    /// `ρ(w)` at numeric `(m, t)`.
    pub fn eval_word(w: &[i32], m: Complex64, t: Complex64) -> [[Complex64; 2]; 2] {
        let s = scaled_word(w);
        let k = m.powu(w.len() as u32);
        let e = |i: usize, j: usize| eval_bipoly(&s[i][j], m, t) / k;
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }
}

pub fn rep_system_riley(p: &KnotPresentation) -> Result<RepSystem, ApolyError> {
    let n = p.generator_count();
    let label = p.label().to_string();
    if n == 1 {
        // In ℤ every word of exponent sum zero is trivial.
        return Ok(RepSystem {
            variables: vec!["m".into()],
            riley: None,
            lon_num: bp(&[(0, 0, 1)]),
            lon_len: 0,
            label,
        });
    }
    if n != 2 || !p.is_meridional() || p.meridian() != &[1] {
        return Err(ApolyError::WrongGeneratorCount(n));
    }
    let mut g = BiPoly::zero();
    for r in p.relators() {
        let s = scaled_word(r);
        let mk = m_power(r.len());
        for (i, row) in s.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let e = if i == j { e.sub(&mk) } else { e.clone() };
                g = if g.is_zero() { e } else { g.gcd(&e) };
            }
        }
    }
    let riley = if g.is_zero() {
        return Err(ApolyError::WrongGeneratorCount(n));
    } else {
        let g = reduce_riley(&g);
        (g.deg_y().unwrap_or(0) > 0).then_some(g)
    };
    let lw = p.longitude();
    let lon = scaled_word(lw);
    if let Some(g) = &riley {
        // On the solution set the longitude commutes with ρ(a), hence is
        // upper triangular.
        if !lon[1][0].pseudo_rem(g).is_zero() {
            return Err(ApolyError::LongitudeNotPeripheral(label));
        }
    }
    Ok(RepSystem {
        variables: vec!["m".into(), "t".into()],
        riley,
        lon_num: lon[0][0].clone(),
        lon_len: lw.len(),
        label,
    })
}
