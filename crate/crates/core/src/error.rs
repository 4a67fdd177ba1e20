use thiserror::Error;

use crate::moves::MoveKind;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("missing `|` separator between word and types")]
    MissingSeparator,
    #[error("invalid letter name `{0}`")]
    InvalidLetter(String),
    #[error("unknown character `{0}`")]
    UnknownCharacter(char),
    #[error("letter `{letter}` occurs {count} times (a Gauss word needs exactly 2)")]
    NotGauss { letter: String, count: usize },
    #[error("type string has length {found} but the word has rank {expected}")]
    TypeCountMismatch { expected: usize, found: usize },
    #[error("invalid type binding `{0}`")]
    InvalidBinding(String),
    #[error("letter `{0}` has no type binding")]
    MissingType(String),
    #[error("type bound for `{0}` which does not occur in the word")]
    UnboundType(String),
    #[error("letter `{0}` is bound more than once")]
    DuplicateBinding(String),
    #[error("letter `{0}` does not occur in the word")]
    UnknownLetter(String),
    #[error("{kind} is not applicable at positions {positions:?}")]
    InvalidSite { kind: MoveKind, positions: Vec<usize> },
    #[error("unknown move kind `{0}`")]
    UnknownMoveKind(String),
    #[error("based matrix is malformed: {0}")]
    MalformedMatrix(String),
    #[error("reduction step is not valid for this based matrix")]
    InvalidReduction,
    #[error("type data missing for element {0}")]
    MissingTypeData(usize),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("rank {rank} exceeds the brute-force cap {cap}")]
    CapExceeded { rank: usize, cap: usize },
    #[error("invalid budget specification `{0}`")]
    InvalidBudget(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
