use super::KnotError;
use serde::{Deserialize, Serialize};

/// A group word: signed, 1-based generator indices (`-2` is `b⁻¹`).
pub type Word = Vec<i32>;

/// Finite presentation of a knot group together with a meridian and a
/// homologically trivial longitude.
///
/// `abelianization[g]` is the image of generator `g+1` in `H₁ ≅ ℤ`
/// (meridian ↦ 1). Wirtinger-type presentations have all ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotPresentation {
    generator_count: usize,
    relators: Vec<Word>,
    meridian: Word,
    longitude: Word,
    label: String,
    abelianization: Vec<i64>,
}

impl KnotPresentation {
    /// Presentation whose generators are all meridians.
    pub fn meridional(
        generator_count: usize,
        relators: Vec<Word>,
        meridian: Word,
        longitude: Word,
        label: impl Into<String>,
    ) -> Result<Self, KnotError> {
        Self::with_abelianization(
            generator_count,
            relators,
            meridian,
            longitude,
            label,
            vec![1; generator_count],
        )
    }

    pub fn with_abelianization(
        generator_count: usize,
        relators: Vec<Word>,
        meridian: Word,
        longitude: Word,
        label: impl Into<String>,
        abelianization: Vec<i64>,
    ) -> Result<Self, KnotError> {
        let p = Self {
            generator_count,
            relators,
            meridian,
            longitude,
            label: label.into(),
            abelianization,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), KnotError> {
        let bad = |m: String| Err(KnotError::InvalidPresentation(m));
        if self.generator_count == 0 {
            return bad("no generators".into());
        }
        if self.abelianization.len() != self.generator_count {
            return bad("abelianization length differs from generator count".into());
        }
        let words = self
            .relators
            .iter()
            .chain([&self.meridian, &self.longitude]);
        for w in words {
            if let Some(&g) = w
                .iter()
                .find(|&&g| g == 0 || g.unsigned_abs() as usize > self.generator_count)
            {
                return bad(format!("generator index {g} out of range"));
            }
        }
        for (i, r) in self.relators.iter().enumerate() {
            if self.exponent_sum(r) != 0 {
                return bad(format!("relator {i} has nonzero exponent sum"));
            }
        }
        if self.exponent_sum(&self.meridian) != 1 {
            return bad("meridian does not map to 1 in H1".into());
        }
        if self.exponent_sum(&self.longitude) != 0 {
            return bad("longitude is not null-homologous".into());
        }
        Ok(())
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn meridian(&self) -> &Word {
        &self.meridian
    }

    pub fn longitude(&self) -> &Word {
        &self.longitude
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn abelianization(&self) -> &[i64] {
        &self.abelianization
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    /// True when every generator is a meridian, as in Wirtinger and Schubert
    /// presentations.
    pub fn is_meridional(&self) -> bool {
        self.abelianization.iter().all(|&w| w == 1)
    }

    /// Image of `w` in `H₁ ≅ ℤ`.
    pub fn exponent_sum(&self, w: &[i32]) -> i64 {
        w.iter()
            .map(|&g| g.signum() as i64 * self.abelianization[g.unsigned_abs() as usize - 1])
            .sum()
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            generators: self.generator_count,
            relators: self.relators.clone(),
            meridian: self.meridian.clone(),
            longitude: self.longitude.clone(),
            label: self.label.clone(),
            abelianization: if self.is_meridional() {
                None
            } else {
                Some(self.abelianization.clone())
            },
        }
    }

    pub fn from_json(doc: &PresentationJson) -> Result<Self, KnotError> {
        Self::with_abelianization(
            doc.generators,
            doc.relators.clone(),
            doc.meridian.clone(),
            doc.longitude.clone(),
            doc.label.clone(),
            doc.abelianization
                .clone()
                .unwrap_or_else(|| vec![1; doc.generators]),
        )
    }
}

/// JSON form, 1-based signed generator indices. `abelianization` is omitted
/// for meridional presentations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: usize,
    pub relators: Vec<Word>,
    pub meridian: Word,
    pub longitude: Word,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelianization: Option<Vec<i64>>,
}

pub fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&g| -g).collect()
}

pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// Free and cyclic reduction (relators only matter up to conjugation).
pub fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.remove(0);
        w.pop();
    }
    w
}

pub fn power(g: i32, k: i64) -> Word {
    let s = if k >= 0 { g } else { -g };
    vec![s; k.unsigned_abs() as usize]
}

pub fn concat(parts: &[&[i32]]) -> Word {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 2]), vec![2]);
        assert_eq!(cyclic_reduce(&[-1, 2, 1, 2, 1]), vec![2, 1, 2]);
        assert_eq!(inverse(&[1, -2, 2]), vec![-2, 2, -1]);
    }

    #[test]
    fn rejects_bad_longitude() {
        let r = KnotPresentation::meridional(1, vec![], vec![1], vec![1], "x");
        assert!(matches!(r, Err(KnotError::InvalidPresentation(_))));
    }

    #[test]
    fn json_roundtrip() {
        let p = KnotPresentation::meridional(
            2,
            vec![vec![1, 2, 1, -2, -1, -2]],
            vec![1],
            vec![2, 1, 1, 2, -1, -1, -1, -1],
            "trefoil",
        )
        .unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        assert!(!s.contains("abelianization"));
        let back: PresentationJson = serde_json::from_str(&s).unwrap();
        assert_eq!(KnotPresentation::from_json(&back).unwrap(), p);
    }
}
