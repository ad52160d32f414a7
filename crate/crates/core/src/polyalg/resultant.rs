//! Sylvester resultants by fraction-free (Bareiss) elimination.

use super::mpoly::MPoly;
use super::PolyError;

/// Determinant of a square matrix over ℚ[vars] by Bareiss elimination.
///
/// Every division in the recurrence is exact, so no rational functions ever
/// appear; row swaps flip the sign.
pub fn bareiss_det(mut a: Vec<Vec<MPoly>>, vars: &[&str]) -> MPoly {
    let n = a.len();
    if n == 0 {
        return MPoly::from_int(vars, 1);
    }
    let mut sign_flip = false;
    let mut prev = MPoly::from_int(vars, 1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return MPoly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MPoly::zero(vars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Sylvester matrix of `p` and `q` with respect to `var`.
pub fn sylvester_matrix(p: &MPoly, q: &MPoly, var: &str) -> Result<Vec<Vec<MPoly>>, PolyError> {
    let vars: Vec<String> = {
        let mut v = p.vars().to_vec();
        for w in q.vars() {
            if !v.contains(w) {
                v.push(w.clone());
            }
        }
        v
    };
    let p = p.with_vars(&vars)?;
    let q = q.with_vars(&vars)?;
    let pc = p.coeffs_in(var)?;
    let qc = q.coeffs_in(var)?;
    let dp = pc.len() - 1;
    let dq = qc.len() - 1;
    let n = dp + dq;
    let vref: Vec<&str> = vars.iter().map(String::as_str).collect();
    let zero = MPoly::zero(&vref);
    let mut m = vec![vec![zero.clone(); n]; n];
    // Columns are ordered by descending power of `var`.
    for i in 0..dq {
        for (k, c) in pc.iter().enumerate() {
            m[i][i + dp - k] = c.clone();
        }
    }
    for i in 0..dp {
        for (k, c) in qc.iter().enumerate() {
            m[dq + i][i + dq - k] = c.clone();
        }
    }
    Ok(m)
}

/// Resultant of `p` and `q` eliminating `var`, computed exactly as the
/// Bareiss determinant of the Sylvester matrix. The result no longer
/// involves `var` but keeps the joint variable list.
pub fn resultant(p: &MPoly, q: &MPoly, var: &str) -> Result<MPoly, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroInput);
    }
    let m = sylvester_matrix(p, q, var)?;
    let vars: Vec<String> = if m.is_empty() {
        p.vars().to_vec()
    } else {
        m[0][0].vars().to_vec()
    };
    let vref: Vec<&str> = vars.iter().map(String::as_str).collect();
    if m.is_empty() {
        // Both constant in `var`.
        return Ok(MPoly::from_int(&vref, 1));
    }
    Ok(bareiss_det(m, &vref))
}

#[cfg(test)]
mod tests {
    use super::*;

    const V: &[&str] = &["x", "a", "b", "m"];

    fn v(n: &str) -> MPoly {
        MPoly::var(V, n).unwrap()
    }
    fn c(k: i64) -> MPoly {
        MPoly::from_int(V, k)
    }

    #[test]
    fn linear_factors() {
        let r = resultant(&v("x").sub(&v("a")), &v("x").sub(&v("b")), "x").unwrap();
        let d = v("a").sub(&v("b"));
        assert!(r == d || r == d.neg(), "got {r}");
    }

    #[test]
    fn quadratic_against_linear() {
        let p = v("x").mul(&v("x")).sub(&c(2));
        let q = v("x").sub(&v("m"));
        let r = resultant(&p, &q, "x").unwrap();
        assert_eq!(r, v("m").mul(&v("m")).sub(&c(2)));
    }

    #[test]
    fn common_factor_gives_zero() {
        let f = v("x").sub(&v("a"));
        let p = f.mul(&v("x").add(&c(3)));
        let q = f.mul(&v("x").sub(&v("b")));
        assert!(resultant(&p, &q, "x").unwrap().is_zero());
    }

    #[test]
    fn zero_input_rejected() {
        assert!(matches!(
            resultant(&c(0), &v("x"), "x"),
            Err(PolyError::ZeroInput)
        ));
    }

    #[test]
    fn bareiss_numeric_det() {
        let m = vec![
            vec![c(2), c(-1), c(0)],
            vec![c(0), c(0), c(3)],
            vec![c(1), c(4), c(1)],
        ];
        // 2*(0-12) - (-1)*(0-3) + 0 = -27
        assert_eq!(bareiss_det(m, V), c(-27));
    }
}
