//! Knot input: parsers for the supported knot descriptions and the group
//! presentations (with meridian and longitude) they produce.

mod braid;
mod presentation;
mod registry;
pub mod tietze;
mod torus;
mod two_bridge;

pub use braid::parse_braid;
pub use presentation::{
    concat, cyclic_reduce, free_reduce, inverse, power, KnotPresentation, PresentationJson, Word,
};
pub use registry::{KnotRegistry, KnotSource};
pub use torus::{parse_torus, presentation_torus, TorusKnotParams};
pub use two_bridge::{parse_two_bridge, presentation_two_bridge, schubert_word, TwoBridgeKnot};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("malformed fraction `{0}` (expected p/q)")]
    MalformedFraction(String),
    #[error("two-bridge numerator {0} is even")]
    EvenP(i64),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("invalid torus knot `{0}`")]
    InvalidTorus(String),
    #[error("braid closure has more than one component")]
    MultiComponentLink,
    #[error("empty braid word")]
    EmptyWord,
    #[error("invalid braid letter `{0}`")]
    InvalidBraidLetter(char),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("no knot source accepts `{0}`")]
    UnknownSpec(String),
    #[error("cannot read `{path}`: {reason}")]
    Io { path: String, reason: String },
}
