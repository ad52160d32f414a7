//! Dense bivariate integer polynomials, viewed as ℤ[x][y].
//!
//! This is the work horse behind exact gcds, divisions and square-free parts:
//! `coeffs[j]` is the coefficient of `y^j`, itself a polynomial in `x`.

use super::upoly::UPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<UPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<UPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds from `(deg_x, deg_y, coeff)` triples; repeated monomials add up.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (usize, usize, &'a BigInt)>) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (dx, dy, c) in terms {
            if rows.len() <= dy {
                rows.resize(dy + 1, Vec::new());
            }
            let row = &mut rows[dy];
            if row.len() <= dx {
                row.resize(dx + 1, BigInt::zero());
            }
            row[dx] += c;
        }
        Self::from_coeffs(rows.into_iter().map(UPoly::from_coeffs).collect())
    }

    /// `(deg_x, deg_y, coeff)` for every nonzero term.
    pub fn terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for (dy, row) in self.coeffs.iter().enumerate() {
            for (dx, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((dx, dy, c.clone()));
                }
            }
        }
        out
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    pub fn lc(&self) -> UPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn swap_vars(&self) -> Self {
        Self::from_terms(
            self.terms()
                .iter()
                .map(|(dx, dy, c)| (*dy, *dx, c))
                .collect::<Vec<_>>(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![UPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn coeff(&self, j: usize) -> UPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &UPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn shift_y(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Content as a polynomial in `x` (gcd of all `y`-coefficients).
    pub fn content_x(&self) -> UPoly {
        self.coeffs.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
    }

    /// Integer content.
    pub fn content_int(&self) -> BigInt {
        self.content_x().content()
    }

    pub fn div_upoly(&self, c: &UPoly) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.div_exact(c)?);
        }
        Some(Self::from_coeffs(out))
    }

    /// Primitive part in ℤ[x][y], sign-normalized so the leading
    /// coefficient's leading coefficient is positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content_x();
        if self.lc().lc().is_negative() {
            c = c.neg();
        }
        self.div_upoly(&c).expect("content divides")
    }

    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.deg_y().expect("pseudo_rem by zero");
        let lc = d.lc();
        let mut r = self.clone();
        let Some(da) = self.deg_y() else {
            return r;
        };
        for k in (dd..=da).rev() {
            let rk = r.coeff(k);
            r = r.scale(&lc).sub(&d.scale(&rk).shift_y(k - dd));
        }
        r
    }

    /// Exact division in ℤ[x][y].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.deg_y()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lc = d.lc();
        let mut r = self.clone();
        let mut q = vec![UPoly::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.deg_y() {
            if dr < dd {
                return None;
            }
            let c = r.lc().div_exact(&lc)?;
            r = r.sub(&d.scale(&c).shift_y(dr - dd));
            q[dr - dd] = c;
        }
        Some(Self::from_coeffs(q))
    }

    /// Gcd in ℤ[x][y] by the primitive remainder sequence in `y`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let c = self.content_x().gcd(&other.content_x());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.deg_y() < b.deg_y() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.deg_y() == Some(0) {
                // A y-free remainder means the primitive parts are coprime.
                a = Self::from_coeffs(vec![UPoly::one()]);
                break;
            }
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive().scale(&c)
    }

    fn normalized_sign(&self) -> Self {
        if self.lc().lc().is_negative() {
            self.scale(&UPoly::constant(BigInt::from(-1)))
        } else {
            self.clone()
        }
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&BigInt::from(j)))
                .collect(),
        )
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.derivative()).collect())
    }

    /// Substitutes `x = x0`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x0: &BigInt) -> UPoly {
        UPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(x0)).collect())
    }
}
