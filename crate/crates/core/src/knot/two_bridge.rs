//! Two-bridge knots in Schubert normal form.

use super::presentation::{concat, power, KnotPresentation, Word};
use super::KnotError;
use num_integer::Integer;
use std::fmt;

/// Two-bridge knot `p/q` with `p` odd, `gcd(p, q) = 1` and `0 < q < p`
/// (the unknot is `1/1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoBridgeKnot {
    p: i64,
    q: i64,
}

impl TwoBridgeKnot {
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        if p <= 0 {
            return Err(KnotError::MalformedFraction(format!("{p}/{q}")));
        }
        if p % 2 == 0 {
            return Err(KnotError::EvenP(p));
        }
        if p.gcd(&q) != 1 {
            return Err(KnotError::NotCoprime(p, q));
        }
        let q = if p == 1 { 1 } else { q.rem_euclid(p) };
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }

    /// Schubert exponents `εᵢ = (−1)^⌊iq/p⌋`, `i = 1 … p−1`, with `q`
    /// replaced by the odd representative `q − p` when `q` is even.
    pub fn epsilons(&self) -> Vec<i32> {
        let q = if self.q % 2 == 0 {
            self.q - self.p
        } else {
            self.q
        };
        (1..self.p)
            .map(|i| {
                if (i * q).div_euclid(self.p).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

pub fn parse_two_bridge(text: &str) -> Result<TwoBridgeKnot, KnotError> {
    let malformed = || KnotError::MalformedFraction(text.to_string());
    let (p, q) = text.trim().split_once('/').ok_or_else(malformed)?;
    let p: i64 = p.trim().parse().map_err(|_| malformed())?;
    let q: i64 = q.trim().parse().map_err(|_| malformed())?;
    TwoBridgeKnot::new(p, q)
}

/// `w = a^ε₁ b^ε₂ a^ε₃ …`, the Schubert word of length `p − 1`.
pub fn schubert_word(k: &TwoBridgeKnot) -> Word {
    k.epsilons()
        .iter()
        .enumerate()
        .map(|(i, &e)| if i % 2 == 0 { e } else { 2 * e })
        .collect()
}

/// Presentation `⟨a, b | w a w⁻¹ b⁻¹⟩`, meridian `a`, longitude
/// `w̃ w a^(−2σ)` with `w̃` the reversed word and `σ = Σ εᵢ`.
pub fn presentation_two_bridge(k: &TwoBridgeKnot) -> KnotPresentation {
    let label = k.to_string();
    if k.is_unknot() {
        return KnotPresentation::meridional(1, vec![], vec![1], vec![], label)
            .expect("unknot presentation is valid");
    }
    let w = schubert_word(k);
    let w_inv: Word = w.iter().rev().map(|&g| -g).collect();
    let relator = concat(&[&w, &[1], &w_inv, &[-2]]);
    let w_rev: Word = w.iter().rev().copied().collect();
    let sigma: i64 = k.epsilons().iter().map(|&e| e as i64).sum();
    let longitude = concat(&[&w_rev, &w, &power(1, -2 * sigma)]);
    KnotPresentation::meridional(2, vec![relator], vec![1], longitude, label)
        .expect("Schubert presentation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::presentation::{cyclic_reduce, free_reduce};

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_two_bridge("1/1").unwrap(),
            TwoBridgeKnot { p: 1, q: 1 }
        );
        assert_eq!(
            parse_two_bridge("3/1").unwrap(),
            TwoBridgeKnot { p: 3, q: 1 }
        );
        assert_eq!(
            parse_two_bridge("5/3").unwrap(),
            TwoBridgeKnot { p: 5, q: 3 }
        );
        assert_eq!(
            parse_two_bridge("7/-4").unwrap(),
            TwoBridgeKnot { p: 7, q: 3 }
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_two_bridge("3-1"),
            Err(KnotError::MalformedFraction(_))
        ));
        assert!(matches!(
            parse_two_bridge("x/1"),
            Err(KnotError::MalformedFraction(_))
        ));
        assert!(matches!(parse_two_bridge("4/1"), Err(KnotError::EvenP(4))));
        assert!(matches!(
            parse_two_bridge("9/3"),
            Err(KnotError::NotCoprime(9, 3))
        ));
    }

    #[test]
    fn unknot_has_one_generator() {
        let p = presentation_two_bridge(&TwoBridgeKnot::new(1, 1).unwrap());
        assert_eq!(p.generator_count(), 1);
        assert!(p.relators().is_empty());
        assert!(p.longitude().is_empty());
    }

    #[test]
    fn trefoil_relator_is_braid_relation() {
        // a b a (ab)^-1 ... must reduce to a cyclic conjugate of aba b^-1 a^-1 b^-1.
        let p = presentation_two_bridge(&TwoBridgeKnot::new(3, 1).unwrap());
        let r = cyclic_reduce(&p.relators()[0]);
        let standard = vec![1, 2, 1, -2, -1, -2];
        let rotations: Vec<Vec<i32>> = (0..r.len())
            .map(|s| r[s..].iter().chain(&r[..s]).copied().collect())
            .collect();
        let inv_std: Vec<i32> = standard.iter().rev().map(|g| -g).collect();
        assert!(
            rotations.contains(&standard) || rotations.contains(&inv_std),
            "relator {r:?}"
        );
    }

    #[test]
    fn homological_invariants() {
        for (p, q) in [(3, 1), (5, 3), (7, 3), (9, 2), (11, 5)] {
            let pres = presentation_two_bridge(&TwoBridgeKnot::new(p, q).unwrap());
            assert_eq!(pres.exponent_sum(pres.meridian()), 1);
            assert_eq!(pres.exponent_sum(pres.longitude()), 0);
            for r in pres.relators() {
                assert_eq!(pres.exponent_sum(r), 0);
            }
            assert_eq!(free_reduce(pres.longitude()).len() % 2, 0);
        }
    }
}
