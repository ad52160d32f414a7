//! A-polynomials by exact elimination on the SL(2, ℂ) representation variety
//! of a two-meridian presentation.

mod eliminate;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
mod riley;

pub use eliminate::{
    eliminate_to_apoly, longitude_resultant, prune_resultant, sample_witnesses, Witness,
    MAX_T_DEGREE,
};
pub use riley::{rep_system_riley, RepSystem};

use crate::knot::{tietze, KnotPresentation};
use crate::polyalg::IntPoly2;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ApolyError {
    #[error("expected two meridional generators, found {0}")]
    WrongGeneratorCount(usize),
    #[error("longitude denominator vanishes identically")]
    DenominatorIdenticallyZero,
    #[error("elimination refused: t-degree {degree} exceeds {}", MAX_T_DEGREE)]
    EliminationOverflow { degree: usize },
    #[error("empty representation system")]
    EmptySystem,
    #[error("presentation `{0}` cannot be reduced to two meridians")]
    UnsupportedPresentation(String),
    #[error("longitude of `{0}` does not commute with the meridian")]
    LongitudeNotPeripheral(String),
}

/// The A-polynomial and its factor complementary to `l − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APolyResult {
    pub a_poly: IntPoly2,
    pub nontrivial_factor: IntPoly2,
    pub diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct APolyDoc<'a> {
    var_order: [&'a str; 2],
    terms: Vec<(u32, u32, String)>,
    nontrivial_factor: String,
    factored: String,
}

impl APolyResult {
    /// `(l − 1)·(F)` with `F` the non-trivial factor, or `l - 1`.
    pub fn factored(&self) -> String {
        if self.nontrivial_factor.is_constant() {
            format!("{}", self.a_poly)
        } else {
            format!("(l - 1)*({})", self.nontrivial_factor)
        }
    }

    /// IntPoly2 JSON of `a_poly` extended by the factored forms.
    pub fn to_json_value(&self) -> serde_json::Value {
        let j = self.a_poly.to_json();
        let doc = APolyDoc {
            var_order: ["m", "l"],
            terms: j.terms,
            nontrivial_factor: format!("{}", self.nontrivial_factor),
            factored: self.factored(),
        };
        serde_json::to_value(doc).expect("serializable")
    }
}

/// The two-meridian form of `p`, if one can be found.
pub fn reduce_presentation(p: &KnotPresentation) -> Result<KnotPresentation, ApolyError> {
    if p.generator_count() == 1 {
        return Ok(p.clone());
    }
    tietze::to_two_meridians(p)
        .ok_or_else(|| ApolyError::UnsupportedPresentation(p.label().to_string()))
}

pub fn apoly(p: &KnotPresentation) -> Result<APolyResult, ApolyError> {
    let q = reduce_presentation(p)?;
    let s = rep_system_riley(&q)?;
    eliminate_to_apoly(&s)
}
