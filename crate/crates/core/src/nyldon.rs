//! Nyldon words: factorization, membership, longest Nyldon suffixes,
//! standard factorization, enumeration and forbidden-prefix probes.

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::word::{self, Alphabet, Factorization, Letter, Monotonicity, Word};

/// Work done by one run of [`nyldon_factorize_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FactorizeStats {
    pub merges: usize,
    pub comparisons: usize,
}

/// Right-to-left factorization. The list is kept head-at-left; here the head
/// is the top of the stack so a head merge is O(1). Factors are contiguous
/// ranges of `w`, so merging the head with its successor only moves an end
/// index.
fn nyldon_ranges(w: &[Letter], stats: &mut FactorizeStats) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        stack.push((i, i + 1));
        while stack.len() >= 2 {
            let (hs, he) = stack[stack.len() - 1];
            let (ss, se) = stack[stack.len() - 2];
            stats.comparisons += 1;
            if w[hs..he] > w[ss..se] {
                stack.pop();
                let last = stack.len() - 1;
                stack[last] = (hs, se);
                stats.merges += 1;
            } else {
                break;
            }
        }
    }
    stack.reverse();
    stack
}

fn to_factorization(w: &[Letter], ranges: Vec<(usize, usize)>) -> Factorization {
    let factors = ranges
        .into_iter()
        .map(|(a, b)| Word::from(&w[a..b]))
        .collect();
    Factorization::from_parts(factors, Monotonicity::Nondecreasing)
}

/// The unique nondecreasing factorization of `w` into Nyldon words.
pub fn nyldon_factorize(w: &[Letter]) -> Result<Factorization> {
    nyldon_factorize_with_stats(w).map(|(f, _)| f)
}

pub fn nyldon_factorize_with_stats(w: &[Letter]) -> Result<(Factorization, FactorizeStats)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut stats = FactorizeStats::default();
    let ranges = nyldon_ranges(w, &mut stats);
    Ok((to_factorization(w, ranges), stats))
}

pub fn is_nyldon(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_nyldon_nonempty(w))
}

pub(crate) fn is_nyldon_nonempty(w: &[Letter]) -> bool {
    nyldon_ranges(w, &mut FactorizeStats::default()).len() == 1
}

/// Longest suffix of `w` that is Nyldon (`proper = false`), or the longest
/// one strictly shorter than `w` (`proper = true`).
///
/// The longest Nyldon suffix of a word is the last factor of its Nyldon
/// factorization. Every proper suffix of `w` is a suffix of `w[1..]`, so the
/// proper variant is the last factor of the factorization of `w[1..]`.
pub fn longest_nyldon_suffix(w: &[Letter], proper: bool) -> Result<Word> {
    match (w.len(), proper) {
        (0, _) => Err(Error::EmptyWord),
        (1, true) => Err(Error::SingleLetter(Word::from(w))),
        (_, false) => Ok(last_factor(w)),
        (_, true) => Ok(last_factor(&w[1..])),
    }
}

fn last_factor(w: &[Letter]) -> Word {
    let ranges = nyldon_ranges(w, &mut FactorizeStats::default());
    let (a, b) = *ranges.last().expect("nonempty input");
    Word::from(&w[a..b])
}

/// `w = left·right` with `right` the longest Nyldon proper suffix of the
/// Nyldon word `w`. Both parts are Nyldon and `left > right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardFactorization {
    pub left: Word,
    pub right: Word,
}

pub fn standard_factorization(w: &[Letter]) -> Result<StandardFactorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if w.len() == 1 {
        return Err(Error::SingleLetter(Word::from(w)));
    }
    if !is_nyldon_nonempty(w) {
        return Err(Error::NotNyldon(Word::from(w)));
    }
    let right = longest_nyldon_suffix(w, true)?;
    let left = Word::from(&w[..w.len() - right.len()]);
    Ok(StandardFactorization { left, right })
}

pub fn nyldon_words_of_length(alphabet: Alphabet, len: usize, exec: Exec) -> Vec<Word> {
    word::words_of_length_where(alphabet, len, exec, is_nyldon_nonempty)
}

/// All Nyldon words of length `1..=max_len`, by length then lexicographically.
pub fn enumerate_nyldon(alphabet: Alphabet, max_len: usize) -> Vec<Word> {
    enumerate_nyldon_with(alphabet, max_len, Exec::default())
}

pub fn enumerate_nyldon_with(alphabet: Alphabet, max_len: usize, exec: Exec) -> Vec<Word> {
    word::words_up_to_where(alphabet, max_len, exec, is_nyldon_nonempty)
}

/// Nyldon words of length at least 2 start with a descent. Returns whether
/// `w` does.
pub fn check_prefix_constraint(w: &[Letter]) -> bool {
    w.len() >= 2 && w[0] > w[1]
}

/// Whether no Nyldon word of length at most `max_len` over `alphabet` has
/// `prefix` as a prefix. For finite `max_len` this is evidence only.
pub fn is_forbidden_prefix_upto(prefix: &[Letter], alphabet: Alphabet, max_len: usize) -> Result<bool> {
    is_forbidden_prefix_upto_with(prefix, alphabet, max_len, Exec::default())
}

pub fn is_forbidden_prefix_upto_with(
    prefix: &[Letter],
    alphabet: Alphabet,
    max_len: usize,
    exec: Exec,
) -> Result<bool> {
    if prefix.is_empty() {
        return Err(Error::EmptyWord);
    }
    if max_len < prefix.len() {
        return Err(Error::InvalidArgument(format!(
            "bound {max_len} is shorter than the prefix"
        )));
    }
    if !alphabet.contains(prefix) {
        return Err(Error::InvalidArgument("prefix is not over the alphabet".into()));
    }
    for ext in 0..=max_len - prefix.len() {
        let total = alphabet
            .count_of_length(ext)
            .ok_or_else(|| Error::InvalidArgument("search space too large".into()))?;
        let hits = crate::par::count_range(exec, 0..total, |r| {
            let mut x = prefix.to_vec();
            x.extend_from_slice(&alphabet.word_at(ext, r));
            is_nyldon_nonempty(&x)
        });
        if hits > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four infinite families of forbidden prefixes:
/// `1 0^k 1 0^k`, `1 0^k 1011`, `10 1^(k+1) 0 1^(k+1)` and
/// `1 0^(k+2) 11 0^(k+1) 11`.
pub fn forbidden_prefix_family(k: usize, family: usize) -> Result<Word> {
    let zeros = |m: usize| vec![0; m];
    let ones = |m: usize| vec![1; m];
    let parts: Vec<Vec<Letter>> = match family {
        1 => vec![vec![1], zeros(k), vec![1], zeros(k)],
        2 => vec![vec![1], zeros(k), vec![1, 0, 1, 1]],
        3 => vec![vec![1, 0], ones(k + 1), vec![0], ones(k + 1)],
        4 => vec![vec![1], zeros(k + 2), vec![1, 1], zeros(k + 1), vec![1, 1]],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "family index must be 1..=4, got {family}"
            )))
        }
    };
    Ok(Word::new(parts.concat()))
}
