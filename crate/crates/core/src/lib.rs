//! Lyndon and Nyldon words.
//!
//! Nyldon words are defined like Lyndon words with the order reversed: letters
//! are Nyldon, and a longer word is Nyldon iff it cannot be split into a
//! lexicographically nondecreasing sequence of shorter Nyldon words. Every
//! word factors uniquely into a nondecreasing sequence of Nyldon words, and
//! every primitive conjugacy class holds exactly one Nyldon word.
//!
//! The crate provides factorization, membership and enumeration for both
//! families, conjugacy maps, Lazard elimination, comma-free and circular code
//! checks, and brute-force references ([`oracle`]) used to cross-check all of
//! them.

pub mod cli;
pub mod codes;
pub mod conjugacy;
pub mod error;
pub mod family;
pub mod lazard;
pub mod lyndon;
pub mod nyldon;
pub mod oracle;
pub mod par;
pub mod word;

pub use error::{Error, Result};
pub use family::Family;
pub use par::Exec;
pub use word::{Alphabet, Factorization, Letter, Monotonicity, Permutation, Word};
