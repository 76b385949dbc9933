use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lyndon::{self, is_lyndon_nonempty};
use crate::nyldon::{self, is_nyldon_nonempty};
use crate::par::Exec;
use crate::word::{Alphabet, Factorization, Letter, Monotonicity, Word};

/// The two complete factorizations of the free monoid handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lyndon,
    Nyldon,
}

impl Family {
    pub fn contains(self, w: &[Letter]) -> Result<bool> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(match self {
            Family::Lyndon => is_lyndon_nonempty(w),
            Family::Nyldon => is_nyldon_nonempty(w),
        })
    }

    pub fn factorize(self, w: &[Letter]) -> Result<Factorization> {
        match self {
            Family::Lyndon => lyndon::lyndon_factorize(w),
            Family::Nyldon => nyldon::nyldon_factorize(w),
        }
    }

    /// Order of the factors in the unique factorization.
    pub fn monotonicity(self) -> Monotonicity {
        match self {
            Family::Lyndon => Monotonicity::Nonincreasing,
            Family::Nyldon => Monotonicity::Nondecreasing,
        }
    }

    pub fn words_of_length(self, alphabet: Alphabet, len: usize, exec: Exec) -> Vec<Word> {
        match self {
            Family::Lyndon => lyndon::lyndon_words_of_length(alphabet, len, exec),
            Family::Nyldon => nyldon::nyldon_words_of_length(alphabet, len, exec),
        }
    }

    pub fn enumerate(self, alphabet: Alphabet, max_len: usize, exec: Exec) -> Vec<Word> {
        match self {
            Family::Lyndon => lyndon::enumerate_lyndon_with(alphabet, max_len, exec),
            Family::Nyldon => nyldon::enumerate_nyldon_with(alphabet, max_len, exec),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Lyndon => "lyndon",
            Family::Nyldon => "nyldon",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lyndon" => Ok(Family::Lyndon),
            "nyldon" => Ok(Family::Nyldon),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}
