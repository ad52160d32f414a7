//! Tietze moves used to bring presentations down to two meridional
//! generators.

use super::presentation::{cyclic_reduce, free_reduce, inverse, KnotPresentation, Word};

/// Substitutes `image[g-1]` for every occurrence of generator `g`.
fn substitute(w: &[i32], image: &[Word]) -> Word {
    let mut out = Vec::new();
    for &g in w {
        let img = &image[g.unsigned_abs() as usize - 1];
        if g > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(inverse(img));
        }
    }
    free_reduce(&out)
}

/// Repeatedly removes a generator occurring exactly once in some relator,
/// solving that relator for it. Generator 1 (the meridian) is never removed,
/// higher indices go first. Stops at `min_generators` or when no relator
/// allows a move.
pub fn eliminate_generators(p: &KnotPresentation, min_generators: usize) -> KnotPresentation {
    let mut n = p.generator_count();
    let mut weights = p.abelianization().to_vec();
    let mut relators: Vec<Word> = p
        .relators()
        .iter()
        .map(|r| cyclic_reduce(r))
        .filter(|r| !r.is_empty())
        .collect();
    let mut meridian = free_reduce(p.meridian());
    let mut longitude = free_reduce(p.longitude());

    while n > min_generators {
        let mut pick: Option<(usize, i32, usize)> = None; // (relator, generator, position)
        for (ri, r) in relators.iter().enumerate() {
            for g in (2..=n as i32).rev() {
                let occ: Vec<usize> = r
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x.abs() == g)
                    .map(|(i, _)| i)
                    .collect();
                if occ.len() == 1 && pick.is_none_or(|(_, pg, _)| g > pg) {
                    pick = Some((ri, g, occ[0]));
                }
            }
        }
        let Some((ri, g, pos)) = pick else {
            break;
        };
        let r = relators.remove(ri);
        let (u, v) = (&r[..pos], &r[pos + 1..]);
        // u g^e v = 1  =>  g^e = u⁻¹ v⁻¹
        let mut sol = inverse(u);
        sol.extend(inverse(v));
        let sol = if r[pos] > 0 { sol } else { inverse(&sol) };
        let gi = g as usize;
        let image: Vec<Word> = (1..=n)
            .map(|h| if h == gi { sol.clone() } else { vec![h as i32] })
            .collect();
        let renumber = |w: Word| -> Word {
            w.into_iter()
                .map(|x| {
                    let a = x.unsigned_abs() as usize;
                    let b = if a > gi { a - 1 } else { a } as i32;
                    x.signum() * b
                })
                .collect()
        };
        relators = relators
            .iter()
            .map(|r| renumber(cyclic_reduce(&substitute(r, &image))))
            .filter(|r| !r.is_empty())
            .collect();
        relators.dedup();
        meridian = renumber(substitute(&meridian, &image));
        longitude = renumber(substitute(&longitude, &image));
        weights.remove(gi - 1);
        n -= 1;
    }
    KnotPresentation::with_abelianization(n, relators, meridian, longitude, p.label(), weights)
        .expect("Tietze moves preserve the homological invariants")
}

/// If `w` freely reduces to `u · g · u⁻¹` for a generator `g`, returns `(u, g)`.
fn conjugate_of_generator(w: &[i32]) -> Option<(Word, i32)> {
    let w = free_reduce(w);
    let k = w.len();
    if k % 2 == 0 {
        return None;
    }
    let mid = k / 2;
    if w[mid] <= 0 {
        return None;
    }
    let u = &w[..mid];
    (inverse(u) == w[mid + 1..]).then(|| (u.to_vec(), w[mid]))
}

/// Conjugates meridian and longitude (and relabels generators if needed) so
/// that the meridian is the word `[1]`.
fn normalize_meridian(p: &KnotPresentation) -> Option<KnotPresentation> {
    let (u, g) = conjugate_of_generator(p.meridian())?;
    let mut lw = inverse(&u);
    lw.extend_from_slice(p.longitude());
    lw.extend_from_slice(&u);
    let mut relators = p.relators().to_vec();
    let mut weights = p.abelianization().to_vec();
    if g != 1 {
        let swap = |w: &Word| -> Word {
            w.iter()
                .map(|&x| match x.abs() {
                    1 => x.signum() * g,
                    a if a == g => x.signum(),
                    _ => x,
                })
                .collect()
        };
        lw = swap(&lw);
        relators = relators.iter().map(swap).collect();
        weights.swap(0, g as usize - 1);
    }
    KnotPresentation::with_abelianization(
        p.generator_count(),
        relators,
        vec![1],
        free_reduce(&lw),
        p.label(),
        weights,
    )
    .ok()
}

/// Recognizes `⟨x, y | x^p y^(−q)⟩` with `min(p, q) = 2` and rewrites it as
/// a two-bridge style presentation on two meridians `a, b` via
/// `X = (ba)^k b`, `Y = ba`, where `X² = Yⁿ`, `n = 2k + 1`.
fn torus_two_strand(p: &KnotPresentation) -> Option<KnotPresentation> {
    if p.generator_count() != 2 || p.relators().len() != 1 {
        return None;
    }
    let r = &p.relators()[0];
    let px = r.iter().take_while(|&&g| g == 1).count();
    let rest = &r[px..];
    if px == 0 || rest.is_empty() || rest.iter().any(|&g| g != -2) {
        return None;
    }
    let qy = rest.len();
    let (x_is_square, n) = match (px, qy) {
        (2, n) if n % 2 == 1 => (true, n),
        (n, 2) if n % 2 == 1 => (false, n),
        _ => return None,
    };
    let k = (n - 1) / 2;
    let ba: Word = vec![2, 1];
    let y_img = ba.clone();
    let mut x_img: Word = ba.iter().copied().cycle().take(2 * k).collect();
    x_img.push(2);
    let image: Vec<Word> = if x_is_square {
        vec![x_img, y_img]
    } else {
        vec![y_img, x_img]
    };
    let relator = cyclic_reduce(&substitute(r, &image));
    let meridian = substitute(p.meridian(), &image);
    let longitude = substitute(p.longitude(), &image);
    let q = KnotPresentation::meridional(2, vec![relator], meridian, longitude, p.label()).ok()?;
    normalize_meridian(&q)
}

/// Attempts to produce an isomorphic presentation on at most two meridional
/// generators with meridian `[1]`.
pub fn to_two_meridians(p: &KnotPresentation) -> Option<KnotPresentation> {
    let q = if p.is_meridional() {
        eliminate_generators(p, 1)
    } else {
        torus_two_strand(p)?
    };
    let q = if q.meridian() == &vec![1] {
        q
    } else {
        normalize_meridian(&q)?
    };
    (q.generator_count() <= 2).then_some(q)
}
