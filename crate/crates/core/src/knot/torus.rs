//! Torus knots `T(p, q)`.

use super::presentation::{concat, power, KnotPresentation, Word};
use super::KnotError;
use num_integer::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnotParams {
    p: i64,
    q: i64,
}

impl TorusKnotParams {
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        if p < 2 || q < 2 {
            return Err(KnotError::InvalidTorus(format!(
                "torus:{p},{q} (both parameters must be at least 2)"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(KnotError::NotCoprime(p, q));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Least non-negative `(r, s)` with `p·s − q·r = 1`.
    pub fn meridian_exponents(&self) -> (i64, i64) {
        let (p, q) = (self.p, self.q);
        let r = (0..p)
            .find(|r| (1 + q * r) % p == 0)
            .expect("q is invertible mod p");
        (r, (1 + q * r) / p)
    }
}

/// Parses `torus:p,q` (the `torus:` prefix is optional).
pub fn parse_torus(text: &str) -> Result<TorusKnotParams, KnotError> {
    let body = text.trim().strip_prefix("torus:").unwrap_or(text.trim());
    let bad = || KnotError::InvalidTorus(text.to_string());
    let (p, q) = body.split_once(',').ok_or_else(bad)?;
    let p: i64 = p.trim().parse().map_err(|_| bad())?;
    let q: i64 = q.trim().parse().map_err(|_| bad())?;
    TorusKnotParams::new(p, q)
}

/// `⟨x, y | x^p y^(−q)⟩`, meridian `x^(−r) y^s`, longitude
/// `x^p · meridian^(−pq)`. In `H₁`, `x ↦ q` and `y ↦ p`.
pub fn presentation_torus(k: &TorusKnotParams) -> KnotPresentation {
    let (p, q) = (k.p, k.q);
    let (r, s) = k.meridian_exponents();
    let relator = concat(&[&power(1, p), &power(2, -q)]);
    let meridian = concat(&[&power(1, -r), &power(2, s)]);
    let mer_inv: Word = meridian.iter().rev().map(|&g| -g).collect();
    let mut longitude = power(1, p);
    for _ in 0..p * q {
        longitude.extend_from_slice(&mer_inv);
    }
    KnotPresentation::with_abelianization(
        2,
        vec![relator],
        meridian,
        longitude,
        format!("torus:{p},{q}"),
        vec![q, p],
    )
    .expect("torus presentation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_relator() {
        let pres = presentation_torus(&TorusKnotParams::new(2, 3).unwrap());
        assert_eq!(pres.relators()[0], vec![1, 1, -2, -2, -2]);
    }

    #[test]
    fn meridian_maps_to_generator_of_h1() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (5, 3), (4, 7)] {
            let k = TorusKnotParams::new(p, q).unwrap();
            let (r, s) = k.meridian_exponents();
            assert_eq!(-r * q + s * p, 1);
            let pres = presentation_torus(&k);
            assert_eq!(pres.exponent_sum(pres.meridian()), 1);
            assert_eq!(pres.exponent_sum(pres.longitude()), 0);
        }
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(parse_torus("torus:1,3").is_err());
        assert!(matches!(
            parse_torus("torus:2,4"),
            Err(KnotError::NotCoprime(2, 4))
        ));
        assert!(parse_torus("torus:2;3").is_err());
    }
}
