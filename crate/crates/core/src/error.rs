use thiserror::Error;

use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("alphabet size must be between 1 and {max}, got {size}")]
    InvalidAlphabet { size: usize, max: usize },
    #[error("letter {letter} out of range for alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },
    #[error("malformed word text: {0:?}")]
    Malformed(String),
    #[error("not a permutation of 0..{size}")]
    InvalidPermutation { size: usize },
    #[error("word {0} is not primitive")]
    NotPrimitive(Word),
    #[error("word {0} is not Lyndon")]
    NotLyndon(Word),
    #[error("word {0} is not Nyldon")]
    NotNyldon(Word),
    #[error("word {0} is a single letter")]
    SingleLetter(Word),
    #[error("conjugacy class of {word} has {found} Nyldon rotations, expected exactly one")]
    ConjugacyViolation { word: Word, found: usize },
    #[error("code words do not share a common length")]
    NonUniformCode,
    #[error("Lazard elimination exceeded {cap} steps")]
    StepCapExceeded { cap: usize },
    #[error("Lazard elimination emitted {0} twice")]
    DuplicateElimination(Word),
    #[error("Lazard elimination reached an empty set")]
    EmptyElimination,
    #[error("word length {len} exceeds the bound {bound}")]
    BoundExceeded { len: usize, bound: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
