//! Simultaneous complex root finding (Aberth–Ehrlich) with residual checks.

use super::PolyError;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Aberth sweeps before giving up.
pub const MAX_SWEEPS: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexRoot {
    pub value: Complex64,
    /// `|P(z)| / (max|c_i| · max(1,|z|)^deg)`
    pub residual: f64,
    pub multiplicity_hint: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ComplexRootSet {
    pub roots: Vec<ComplexRoot>,
    pub tolerance: f64,
}

impl ComplexRootSet {
    pub fn values(&self) -> Vec<Complex64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    // Returns (P(z), P'(z)); coeffs are in ascending order.
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Scaled residual used for acceptance.
pub fn residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let deg = coeffs.len().saturating_sub(1) as i32;
    let maxc = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let scale = maxc * z.norm().max(1.0).powi(deg);
    if scale == 0.0 {
        return 0.0;
    }
    horner(coeffs, z).0.norm() / scale
}

/// All complex roots of `Σ coeffs[i] z^i`.
///
/// Leading zeros are stripped first. Starting points lie on the circle of
/// radius `1 + max|c_i / c_deg|`; the result is sorted by `(re, im)`.
pub fn roots_univar(coeffs: &[Complex64], tol: f64) -> Result<ComplexRootSet, PolyError> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|z| *z == Complex64::new(0.0, 0.0)) {
        c.pop();
    }
    if c.len() < 2 {
        return Err(PolyError::DegreeZero);
    }
    // Exact zero roots are split off so the iteration only sees a nonzero
    // constant term.
    let zeros = c
        .iter()
        .take_while(|z| **z == Complex64::new(0.0, 0.0))
        .count();
    let c: Vec<Complex64> = c[zeros..].to_vec();
    let n = c.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if n > 0 {
        roots.extend(aberth(&c, n));
    }
    let full = {
        let mut f = vec![Complex64::new(0.0, 0.0); zeros];
        f.extend(c.iter().copied());
        f
    };
    let mut out: Vec<ComplexRoot> = roots
        .iter()
        .map(|&z| ComplexRoot {
            value: z,
            residual: residual(&full, z),
            multiplicity_hint: 1,
        })
        .collect();
    let worst = out.iter().map(|r| r.residual).fold(0.0, f64::max);
    if !(worst < tol) {
        return Err(PolyError::NonConvergence {
            worst_residual: worst,
        });
    }
    let cluster = tol.sqrt().max(1e-6);
    for i in 0..out.len() {
        let zi = out[i].value;
        let k = out
            .iter()
            .filter(|r| (r.value - zi).norm() <= cluster * zi.norm().max(1.0))
            .count();
        out[i].multiplicity_hint = k;
    }
    out.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(ComplexRootSet {
        roots: out,
        tolerance: tol,
    })
}

fn aberth(c: &[Complex64], n: usize) -> Vec<Complex64> {
    let lead = c[n];
    let radius = 1.0
        + c[..n]
            .iter()
            .map(|ci| (ci / lead).norm())
            .fold(0.0, f64::max);
    // Offset angle avoids starting on a symmetry axis of real polynomials.
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let ang = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, ang)
        })
        .collect();
    for _ in 0..MAX_SWEEPS {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += 1.0 / d;
                    }
                }
            }
            let denom = 1.0 - ratio * s;
            let step = if denom.norm() > 0.0 && ratio.is_finite() {
                ratio / denom
            } else {
                Complex64::new(0.0, 0.0)
            };
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // A few Newton steps tighten simple roots; steps that increase the
    // residual are rejected so clustered roots are left alone.
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(c, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let cand = *zi - p / dp;
            if horner(c, cand).0.norm() < p.norm() {
                *zi = cand;
            } else {
                break;
            }
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(c: &[f64]) -> Vec<Complex64> {
        c.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    }

    #[test]
    fn m_squared_plus_one() {
        let r = roots_univar(&re(&[1.0, 0.0, 1.0]), 1e-12).unwrap();
        let v = r.values();
        assert_eq!(v.len(), 2);
        assert!((v[0] - Complex64::new(0.0, -1.0)).norm() < 1e-14);
        assert!((v[1] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn constant_is_degree_zero() {
        assert!(matches!(
            roots_univar(&re(&[3.0, 0.0, 0.0]), 1e-12),
            Err(PolyError::DegreeZero)
        ));
    }

    #[test]
    fn m6_plus_one_on_unit_circle() {
        // Roots are the primitive 12th roots of unity with odd index.
        let r = roots_univar(&re(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]), 1e-12).unwrap();
        assert_eq!(r.len(), 6);
        for root in &r.roots {
            assert!((root.value.norm() - 1.0).abs() < 1e-12);
            let k = root.value.arg() / (std::f64::consts::PI / 6.0);
            assert!((k - k.round()).abs() < 1e-10 && (k.round() as i64).rem_euclid(2) == 1);
        }
    }

    #[test]
    fn zero_roots_split_off() {
        let r = roots_univar(&re(&[0.0, 0.0, -4.0, 1.0]), 1e-12).unwrap();
        let v = r.values();
        assert_eq!(v.len(), 3);
        assert!(v.iter().filter(|z| z.norm() == 0.0).count() == 2);
        assert!(v
            .iter()
            .any(|z| (z - Complex64::new(4.0, 0.0)).norm() < 1e-12));
    }

    #[test]
    fn double_root_has_multiplicity_hint() {
        // (z-1)^2 (z+2)
        let r = roots_univar(&re(&[2.0, -3.0, 0.0, 1.0]), 1e-12).unwrap();
        let near_one: Vec<_> = r
            .roots
            .iter()
            .filter(|x| (x.value - Complex64::new(1.0, 0.0)).norm() < 1e-6)
            .collect();
        assert_eq!(near_one.len(), 2);
        assert!(near_one.iter().all(|x| x.multiplicity_hint == 2));
    }
}
