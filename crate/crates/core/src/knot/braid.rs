//! Knots given as closed braids.
//!
//! Letters `a, b, c, …` are the Artin generators `σ₁, σ₂, σ₃, …`; upper case
//! letters are their inverses.

use super::presentation::{free_reduce, power, KnotPresentation, Word};
use super::tietze;
use super::KnotError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Crossing {
    /// Braid position `i` of `σᵢ^(±1)` (0-based).
    pos: usize,
    positive: bool,
}

fn parse_letters(text: &str) -> Result<Vec<Crossing>, KnotError> {
    let body = text.trim().strip_prefix("braid:").unwrap_or(text.trim());
    if body.is_empty() {
        return Err(KnotError::EmptyWord);
    }
    body.chars()
        .map(|c| match c {
            'a'..='z' => Ok(Crossing {
                pos: (c as u8 - b'a') as usize,
                positive: true,
            }),
            'A'..='Z' => Ok(Crossing {
                pos: (c as u8 - b'A') as usize,
                positive: false,
            }),
            _ => Err(KnotError::InvalidBraidLetter(c)),
        })
        .collect()
}

/// Wirtinger presentation of the braid closure (one generator per arc),
/// followed by Tietze elimination of redundant arc generators.
///
/// Arcs are oriented downwards. At `σᵢ` the strand in position `i` passes
/// over; the strand from position `i+1` becomes the new arc
/// `x_over · x_under · x_over⁻¹` in position `i`. `σᵢ⁻¹` is the mirror
/// image with the conjugation reversed. The longitude is read off while
/// following the strand that starts in position 1, then corrected by a
/// meridian power to exponent sum zero.
pub fn parse_braid(text: &str) -> Result<KnotPresentation, KnotError> {
    let crossings = parse_letters(text)?;
    let strands = crossings.iter().map(|c| c.pos).max().unwrap_or(0) + 2;

    // Permutation: where the strand entering at the top of position j exits.
    let mut perm_track: Vec<usize> = (0..strands).collect(); // position -> top index
    for c in &crossings {
        perm_track.swap(c.pos, c.pos + 1);
    }
    let mut exit_of = vec![0; strands];
    for (pos, &top) in perm_track.iter().enumerate() {
        exit_of[top] = pos;
    }
    let mut seen = vec![false; strands];
    let mut cur = 0;
    for _ in 0..strands {
        if seen[cur] {
            return Err(KnotError::MultiComponentLink);
        }
        seen[cur] = true;
        cur = exit_of[cur];
    }
    if cur != 0 {
        return Err(KnotError::MultiComponentLink);
    }

    let mut gens = strands;
    let mut arcs: Vec<i32> = (1..=strands as i32).collect();
    let mut relators: Vec<Word> = Vec::new();
    // For each crossing: (over arc generator with exponent, top index of the under strand).
    let mut conj: Vec<(i32, usize)> = Vec::new();
    let mut top_at: Vec<usize> = (0..strands).collect();
    for c in &crossings {
        let i = c.pos;
        gens += 1;
        let new = gens as i32;
        if c.positive {
            let (over, under) = (arcs[i], arcs[i + 1]);
            relators.push(vec![over, under, -over, -new]);
            conj.push((over, top_at[i + 1]));
            arcs[i] = new;
            arcs[i + 1] = over;
        } else {
            let (over, under) = (arcs[i + 1], arcs[i]);
            relators.push(vec![-over, under, over, -new]);
            conj.push((-over, top_at[i]));
            arcs[i] = over;
            arcs[i + 1] = new;
        }
        top_at.swap(i, i + 1);
    }
    for (pos, &arc) in arcs.iter().enumerate() {
        let top = pos as i32 + 1;
        if arc != top {
            relators.push(vec![arc, -top]);
        }
    }

    // Follow the knot from the top of position 1; each undercrossing
    // conjugates the current arc, so the accumulated conjugator commutes
    // with the meridian x₁.
    let mut conjugator: Word = Vec::new();
    let mut top = 0;
    loop {
        for &(c, under_top) in &conj {
            if under_top == top {
                conjugator.insert(0, c);
            }
        }
        top = exit_of[top];
        if top == 0 {
            break;
        }
    }
    let es: i64 = conjugator.iter().map(|g| g.signum() as i64).sum();
    let mut longitude = conjugator;
    longitude.extend(power(1, -es));
    let longitude = free_reduce(&longitude);

    let label = format!("braid:{}", text.trim().trim_start_matches("braid:"));
    let wirtinger = KnotPresentation::meridional(gens, relators, vec![1], longitude, label)?;
    Ok(tietze::eliminate_generators(&wirtinger, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_rejected() {
        assert!(matches!(parse_braid(""), Err(KnotError::EmptyWord)));
        assert!(matches!(parse_braid("braid:"), Err(KnotError::EmptyWord)));
    }

    #[test]
    fn two_component_closure_rejected() {
        assert!(matches!(
            parse_braid("aa"),
            Err(KnotError::MultiComponentLink)
        ));
        assert!(matches!(parse_braid("ab"), Ok(_)));
        assert!(matches!(
            parse_braid("ac"),
            Err(KnotError::MultiComponentLink)
        ));
    }

    #[test]
    fn single_crossing_is_unknot() {
        let p = parse_braid("a").unwrap();
        assert_eq!(p.generator_count(), 1);
        assert!(p.longitude().is_empty());
    }

    #[test]
    fn trefoil_reduces_to_two_generators() {
        let p = parse_braid("aaa").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.meridian(), &vec![1]);
        assert_eq!(p.exponent_sum(p.longitude()), 0);
        for r in p.relators() {
            assert_eq!(p.exponent_sum(r), 0);
        }
    }

    #[test]
    fn figure_eight_three_strands() {
        let p = parse_braid("aBaB").unwrap();
        assert!(p.generator_count() <= 3);
        assert_eq!(p.exponent_sum(p.longitude()), 0);
    }
}
