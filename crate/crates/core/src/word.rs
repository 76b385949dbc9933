//! Alphabets, words and factorizations.
//!
//! Letters are the integers `0..k` of an alphabet of size `k`, ordered
//! `0 < 1 < ... < k-1`. Words compare lexicographically with a proper prefix
//! sorting before its extensions, which is exactly the ordering `[u8]`
//! already implements.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::{self, Exec};

pub type Letter = u8;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet {
                size,
                max: MAX_ALPHABET,
            });
        }
        Ok(Alphabet { size })
    }

    pub fn binary() -> Self {
        Alphabet { size: 2 }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> {
        (0..self.size).map(|a| a as Letter)
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        w.iter().all(|&a| (a as usize) < self.size)
    }

    /// Number of words of length `len`, or `None` on overflow.
    pub fn count_of_length(&self, len: usize) -> Option<u64> {
        (self.size as u64).checked_pow(u32::try_from(len).ok()?)
    }

    /// The word of length `len` whose letters are the base-`k` digits of
    /// `rank`, most significant first. Ranks enumerate `A^len` in
    /// lexicographic order.
    pub fn word_at(&self, len: usize, mut rank: u64) -> Word {
        let k = self.size as u64;
        let mut letters = vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = (rank % k) as Letter;
            rank /= k;
        }
        Word(letters)
    }

    /// Inverse of [`Alphabet::word_at`].
    pub fn rank_of(&self, w: &[Letter]) -> u64 {
        let k = self.size as u64;
        w.iter().fold(0, |acc, &a| acc * k + a as u64)
    }

    /// All words of length `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> + '_ {
        let total = self.count_of_length(len).expect("word space too large");
        (0..total).map(move |r| self.word_at(len, r))
    }
}

/// Words of length `len` satisfying `keep`, in lexicographic order.
pub fn words_of_length_where<F>(alphabet: Alphabet, len: usize, exec: Exec, keep: F) -> Vec<Word>
where
    F: Fn(&[Letter]) -> bool + Send + Sync,
{
    let total = alphabet.count_of_length(len).expect("word space too large");
    par::filter_map_range(exec, 0..total, |r| {
        let x = alphabet.word_at(len, r);
        keep(&x).then_some(x)
    })
}

/// Words of length `1..=max_len` satisfying `keep`, grouped by length and
/// lexicographically sorted within each length.
pub fn words_up_to_where<F>(alphabet: Alphabet, max_len: usize, exec: Exec, keep: F) -> Vec<Word>
where
    F: Fn(&[Letter]) -> bool + Send + Sync,
{
    (1..=max_len)
        .flat_map(|len| words_of_length_where(alphabet, len, exec, &keep))
        .collect()
}

/// A finite word over an integer alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn concat<'a, I>(parts: I) -> Word
    where
        I: IntoIterator<Item = &'a [Letter]>,
    {
        let mut out = Vec::new();
        for p in parts {
            out.extend_from_slice(p);
        }
        Word(out)
    }

    /// `self` repeated `exp` times.
    pub fn pow(&self, exp: usize) -> Word {
        Word(self.0.repeat(exp))
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0, self.0.iter().all(|&a| a < 10)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Monotonicity {
    Nondecreasing,
    Nonincreasing,
}

impl Monotonicity {
    /// Whether `prev` may be followed by `next`.
    pub fn allows(self, prev: &[Letter], next: &[Letter]) -> bool {
        match self {
            Monotonicity::Nondecreasing => prev <= next,
            Monotonicity::Nonincreasing => prev >= next,
        }
    }
}

/// An ordered sequence of nonempty factors tagged with the monotonicity they
/// satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<Word>,
    monotonicity: Monotonicity,
}

impl Factorization {
    pub(crate) fn from_parts(factors: Vec<Word>, monotonicity: Monotonicity) -> Self {
        debug_assert!(factors.iter().all(|f| !f.is_empty()));
        debug_assert!(factors
            .windows(2)
            .all(|p| monotonicity.allows(&p[0], &p[1])));
        Factorization {
            factors,
            monotonicity,
        }
    }

    /// Checked constructor.
    pub fn new(factors: Vec<Word>, monotonicity: Monotonicity) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|f| f.is_empty()) {
            return Err(Error::EmptyWord);
        }
        if !factors
            .windows(2)
            .all(|p| monotonicity.allows(&p[0], &p[1]))
        {
            return Err(Error::InvalidArgument(format!(
                "factors are not {monotonicity:?}"
            )));
        }
        Ok(Factorization {
            factors,
            monotonicity,
        })
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Word> {
        self.factors
    }

    pub fn monotonicity(&self) -> Monotonicity {
        self.monotonicity
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn last(&self) -> &Word {
        self.factors.last().expect("factorizations are nonempty")
    }

    /// The word this factorization spells.
    pub fn word(&self) -> Word {
        Word::concat(self.factors.iter().map(|f| f.letters()))
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len()).collect()
    }

    /// Factors joined by `|`, each in the text format of `alphabet`.
    pub fn format(&self, alphabet: Alphabet) -> String {
        self.factors
            .iter()
            .map(|f| format_word(f, alphabet))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

pub fn lex_compare(u: &[Letter], v: &[Letter]) -> Ordering {
    u.cmp(v)
}

/// The rotations `w[i..]·w[..i]` for `i = 0..|w|`, duplicates included.
pub fn rotations(w: &[Letter]) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((0..w.len()).map(|i| rotation(w, i)).collect())
}

pub fn rotation(w: &[Letter], i: usize) -> Word {
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[i..]);
    out.extend_from_slice(&w[..i]);
    Word(out)
}

/// A word is primitive iff it does not occur inside `ww` at any offset
/// `1..|w|`. The empty word counts as a power.
pub fn is_primitive(w: &[Letter]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    let doubled: Vec<Letter> = w.iter().chain(w.iter()).copied().collect();
    find(&doubled[1..2 * n - 1], w).is_none()
}

/// First occurrence of `pattern` in `text` (Knuth–Morris–Pratt).
fn find(text: &[Letter], pattern: &[Letter]) -> Option<usize> {
    if pattern.is_empty() {
        return Some(0);
    }
    let mut fail = vec![0usize; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut q = 0;
    for (i, &c) in text.iter().enumerate() {
        while q > 0 && c != pattern[q] {
            q = fail[q - 1];
        }
        if c == pattern[q] {
            q += 1;
        }
        if q == pattern.len() {
            return Some(i + 1 - q);
        }
    }
    None
}

/// A bijection on the letters `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Letter>,
    inverse: Vec<Letter>,
}

impl Permutation {
    pub fn new(images: Vec<Letter>) -> Result<Self> {
        let size = images.len();
        let mut inverse = vec![Letter::MAX; size];
        for (i, &img) in images.iter().enumerate() {
            let slot = inverse
                .get_mut(img as usize)
                .ok_or(Error::InvalidPermutation { size })?;
            if *slot != Letter::MAX || size > MAX_ALPHABET {
                return Err(Error::InvalidPermutation { size });
            }
            *slot = i as Letter;
        }
        Ok(Permutation { images, inverse })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images: Vec<Letter> = alphabet.letters().collect();
        Permutation {
            inverse: images.clone(),
            images,
        }
    }

    /// `i ↦ k-1-i`.
    pub fn reverse(alphabet: Alphabet) -> Self {
        let images: Vec<Letter> = alphabet.letters().rev().collect();
        Permutation {
            inverse: images.clone(),
            images,
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, a: Letter) -> Letter {
        self.images[a as usize]
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        Word(w.iter().map(|&a| self.image(a)).collect())
    }

    /// Lexicographic comparison under the letter order
    /// `π(0) < π(1) < ... < π(k-1)`.
    pub fn twisted_cmp(&self, u: &[Letter], v: &[Letter]) -> Ordering {
        let rank = |a: &Letter| self.inverse[*a as usize];
        u.iter().map(rank).cmp(v.iter().map(rank))
    }
}

pub fn apply_permutation(pi: &Permutation, w: &[Letter]) -> Word {
    pi.apply(w)
}

/// Parses a word: a digit string when `k <= 10`, otherwise a comma-separated
/// list of decimal letters.
pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word> {
    let k = alphabet.size();
    let check = |letter: usize| {
        if letter < k {
            Ok(letter as Letter)
        } else {
            Err(Error::LetterOutOfRange { letter, size: k })
        }
    };
    if k <= 10 {
        text.chars()
            .map(|c| {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| Error::Malformed(text.to_string()))?;
                check(d as usize)
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    } else {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        text.split(',')
            .map(|part| {
                let part = part.trim();
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Malformed(text.to_string()));
                }
                let letter: usize = part
                    .parse()
                    .map_err(|_| Error::LetterOutOfRange {
                        letter: usize::MAX,
                        size: k,
                    })?;
                check(letter)
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

pub fn format_word(w: &[Letter], alphabet: Alphabet) -> String {
    format_letters(w, alphabet.size() <= 10)
}

fn format_letters(w: &[Letter], digits: bool) -> String {
    if digits {
        w.iter().map(|&a| char::from(b'0' + a)).collect()
    } else {
        w.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Shorthand for building words in tests and examples: `w("10100")`.
pub fn w(text: &str) -> Word {
    parse_word(text, Alphabet { size: 10 }).expect("digit word")
}
