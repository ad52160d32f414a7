//! Exact bivariate integer polynomials in the boundary eigenvalues `(m, l)`.

use super::bipoly::BiPoly;
use super::upoly::UPoly;
use super::PolyError;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Sparse polynomial in ℤ[m, l]; keys are `(deg_m, deg_l)`, zero
/// coefficients are never stored.
///
/// Polynomials produced by the A-polynomial pipeline are kept in canonical
/// form (see [`IntPoly2::normalized`]); intermediate values need not be.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly2 {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_terms([(0, 0, BigInt::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, BigInt)>) -> Self {
        let mut map: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (dm, dl, c) in terms {
            *map.entry((dm, dl)).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { terms: map }
    }

    pub fn from_i64_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(a, b, c)| (a, b, BigInt::from(c))))
    }

    /// `l - 1`
    pub fn l_minus_one() -> Self {
        Self::from_i64_terms(&[(0, 1, 1), (0, 0, -1)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, dm: u32, dl: u32) -> BigInt {
        self.terms.get(&(dm, dl)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == 0 && b == 0)
    }

    /// Degree in `m`; 0 for constants and the zero polynomial.
    pub fn deg_m(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_l(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Leading coefficient in the lexicographic order with `l > m`.
    pub fn leading_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .max_by_key(|(&(dm, dl), _)| (dl, dm))
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Canonical form: integer content 1 and positive leading coefficient
    /// (lex order `l > m`). The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v / &c)).collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero() || (self.content().is_one() && self.leading_coeff().is_positive())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .chain(other.terms())
                .map(|(a, b, c)| (a, b, c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(a, b, c)| (a, b, c.clone()))
                .chain(other.terms().map(|(a, b, c)| (a, b, -c))),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.num_terms() * other.num_terms());
        for (a1, b1, c1) in self.terms() {
            for (a2, b2, c2) in other.terms() {
                out.push((a1 + a2, b1 + b2, c1 * c2));
            }
        }
        Self::from_terms(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms().map(|(a, b, v)| (a, b, v * c)))
    }

    /// Multiplies by `m^dm l^dl`.
    pub fn shift(&self, dm: u32, dl: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dm, b + dl), c.clone()))
                .collect(),
        }
    }

    pub fn derivative_m(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(a, _, _)| *a > 0)
                .map(|(a, b, c)| (a - 1, b, c * BigInt::from(a))),
        )
    }

    pub fn derivative_l(&self) -> Self {
        Self::from_terms(
            self.terms()
                .filter(|(_, b, _)| *b > 0)
                .map(|(a, b, c)| (a, b - 1, c * BigInt::from(b))),
        )
    }

    /// View as ℤ[m][l] (`x = m`, `y = l`).
    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms(self.terms().map(|(a, b, c)| (a as usize, b as usize, c)))
    }

    pub fn from_bipoly(p: &BiPoly) -> Self {
        Self::from_terms(
            p.terms()
                .into_iter()
                .map(|(a, b, c)| (a as u32, b as u32, c)),
        )
    }

    /// Gcd over ℤ[m, l], in canonical form.
    pub fn gcd(&self, other: &Self) -> Self {
        Self::from_bipoly(&self.to_bipoly().gcd(&other.to_bipoly())).normalized()
    }

    /// Exact division over ℤ[m, l].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let q = self.to_bipoly().div_exact(&d.to_bipoly())?;
        Some(Self::from_bipoly(&q))
    }

    /// Content with respect to `l`: the gcd in ℤ[m] of the `l`-coefficients,
    /// i.e. the largest factor with no `l`-dependence.
    pub fn content_in_m(&self) -> UPoly {
        self.to_bipoly().content_x()
    }

    /// Content with respect to `m`: the largest factor with no `m`-dependence.
    pub fn content_in_l(&self) -> UPoly {
        self.to_bipoly().swap_vars().content_x()
    }

    pub fn from_upoly_m(p: &UPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as u32, 0, c.clone())),
        )
    }

    pub fn from_upoly_l(p: &UPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (0, i as u32, c.clone())),
        )
    }

    /// Evaluates at complex `(m, l)` in double precision.
    pub fn eval_complex(&self, m: Complex64, l: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for (a, b, c) in self.terms() {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc += m.powu(a) * l.powu(b) * cf;
        }
        acc
    }

    /// Sum of absolute coefficient values, the natural bound for `|P|` on the
    /// unit torus `|m| = |l| = 1`.
    pub fn abs_coeff_sum(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// `|P(m, l)|` relative to the magnitude bound `Σ|c|·|m|^a·|l|^b`.
    pub fn relative_residual(&self, m: Complex64, l: Complex64) -> f64 {
        let (am, al) = (m.norm(), l.norm());
        let scale: f64 = self
            .terms()
            .map(|(a, b, c)| {
                c.abs().to_f64().unwrap_or(f64::INFINITY) * am.powi(a as i32) * al.powi(b as i32)
            })
            .sum();
        if scale == 0.0 {
            return 0.0;
        }
        self.eval_complex(m, l).norm() / scale
    }

    /// Collects the coefficients of `m^k` after substituting a complex `l`.
    pub fn coeffs_in_m_at_l(&self, l: Complex64) -> Vec<Complex64> {
        let mut out = vec![Complex64::zero(); self.deg_m() as usize + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (a, b, c) in self.terms() {
            out[a as usize] += l.powu(b) * c.to_f64().unwrap_or(f64::NAN);
        }
        out
    }

    pub fn to_json(&self) -> IntPoly2Json {
        IntPoly2Json {
            var_order: vec!["m".to_string(), "l".to_string()],
            terms: self
                .terms()
                .map(|(a, b, c)| (a, b, c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(doc: &IntPoly2Json) -> Result<Self, PolyError> {
        let swap = match doc
            .var_order
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>()
            .as_slice()
        {
            ["m", "l"] => false,
            ["l", "m"] => true,
            _ => {
                return Err(PolyError::Format(format!(
                    "unsupported var_order {:?}",
                    doc.var_order
                )))
            }
        };
        let mut terms = Vec::with_capacity(doc.terms.len());
        for (a, b, c) in &doc.terms {
            let c = BigInt::from_str(c)
                .map_err(|e| PolyError::Format(format!("bad coefficient {c:?}: {e}")))?;
            terms.push(if swap { (*b, *a, c) } else { (*a, *b, c) });
        }
        Ok(Self::from_terms(terms))
    }
}

/// Wire form: `{"var_order": ["m","l"], "terms": [[dm, dl, "coeff"], …]}`,
/// terms sorted lexicographically by `(dm, dl)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntPoly2Json {
    pub var_order: Vec<String>,
    pub terms: Vec<(u32, u32, String)>,
}

impl fmt::Debug for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPoly2 {
    /// Terms in descending lex order `l > m`, e.g. `l^2*m^4 - l + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(dm, dl)| std::cmp::Reverse((dl, dm)));
        for (i, (dm, dl)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(dm, dl)];
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut factors = Vec::new();
            if !a.is_one() || (dm == 0 && dl == 0) {
                factors.push(a.to_string());
            }
            match dl {
                0 => {}
                1 => factors.push("l".into()),
                k => factors.push(format!("l^{k}")),
            }
            match dm {
                0 => {}
                1 => factors.push("m".into()),
                k => factors.push(format!("m^{k}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Square-free part: `P / gcd(P, ∂P/∂m, ∂P/∂l)`, canonical form.
///
/// Each irreducible factor of `P` appears exactly once in the result.
pub fn squarefree(p: &IntPoly2) -> IntPoly2 {
    if p.is_zero() || p.is_constant() {
        return p.normalized();
    }
    let bp = p.to_bipoly();
    let g = bp
        .gcd(&p.derivative_m().to_bipoly())
        .gcd(&p.derivative_l().to_bipoly());
    let q = bp.div_exact(&g).expect("gcd divides");
    IntPoly2::from_bipoly(&q).normalized()
}

/// Divides `p` by `d` when the division is exact over ℤ[m, l]; otherwise
/// returns `p` unchanged with the flag cleared.
pub fn divide_out(p: &IntPoly2, d: &IntPoly2) -> (IntPoly2, bool) {
    match p.div_exact(d) {
        Some(q) => (q, true),
        None => (p.clone(), false),
    }
}
