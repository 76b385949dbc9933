//! Slow, independent references for cross-checking the fast paths.
//!
//! Membership here follows the recursive definitions directly: letters are
//! members, and a longer word is a member iff it has no factorization into
//! shorter members that is nonincreasing (Lyndon) or nondecreasing (Nyldon).
//! Nothing in this module calls Duval's algorithm or the right-to-left Nyldon
//! factorization, except [`count_by_length`] and [`counting_bijection`] which
//! are built from the production enumerations on purpose.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::par::Exec;
use crate::word::{Alphabet, Factorization, Letter, Monotonicity, Word};

/// Default word-length bound for [`exhaustive_factorizations`].
pub const DEFAULT_EXHAUSTIVE_BOUND: usize = 10;

/// Membership tables for one family, built length by length.
#[derive(Debug, Clone)]
pub struct RecursiveMembership {
    family: Family,
    alphabet: Alphabet,
    /// `members[len][rank]` for `len` in `1..=max_len`; index 0 unused.
    members: Vec<Vec<bool>>,
}

impl RecursiveMembership {
    pub fn build(family: Family, alphabet: Alphabet, max_len: usize) -> Result<Self> {
        Self::build_with(family, alphabet, max_len, Exec::default())
    }

    /// Each length is decided from the already complete tables of shorter
    /// lengths, so the words of one length can be decided concurrently.
    pub fn build_with(family: Family, alphabet: Alphabet, max_len: usize, exec: Exec) -> Result<Self> {
        let mut table = RecursiveMembership {
            family,
            alphabet,
            members: vec![Vec::new()],
        };
        for len in 1..=max_len {
            let total = alphabet
                .count_of_length(len)
                .filter(|&t| t <= 1 << 26)
                .ok_or(Error::BoundExceeded { len, bound: max_len })?;
            let row = crate::par::map_range(exec, 0..total, |r| {
                let x = alphabet.word_at(len, r);
                len == 1 || !table.has_short_factorization(&x)
            });
            table.members.push(row);
        }
        Ok(table)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_len(&self) -> usize {
        self.members.len() - 1
    }

    /// Membership of a word of length `1..=max_len`.
    pub fn contains(&self, w: &[Letter]) -> bool {
        assert!(
            !w.is_empty() && w.len() <= self.max_len(),
            "word length {} outside table range 1..={}",
            w.len(),
            self.max_len()
        );
        self.members[w.len()][self.alphabet.rank_of(w) as usize]
    }

    /// Whether `w` splits into at least two members in the family's order.
    fn has_short_factorization(&self, w: &[Letter]) -> bool {
        let mono = self.family.monotonicity();
        let mut memo = HashMap::new();
        (1..w.len()).any(|first| {
            self.contains(&w[..first]) && self.can_continue(w, 0, first, mono, &mut memo)
        })
    }

    /// Can `w[end..]` be factorized into members, each compatible with its
    /// predecessor, the first one following `w[start..end]`?
    fn can_continue(
        &self,
        w: &[Letter],
        start: usize,
        end: usize,
        mono: Monotonicity,
        memo: &mut HashMap<(usize, usize), bool>,
    ) -> bool {
        if end == w.len() {
            return true;
        }
        if let Some(&known) = memo.get(&(start, end)) {
            return known;
        }
        let prev = &w[start..end];
        let result = (end + 1..=w.len()).any(|next_end| {
            let piece = &w[end..next_end];
            piece.len() < w.len()
                && mono.allows(prev, piece)
                && self.contains(piece)
                && self.can_continue(w, end, next_end, mono, memo)
        });
        memo.insert((start, end), result);
        result
    }
}

fn alphabet_of(w: &[Letter]) -> Alphabet {
    let k = w.iter().copied().max().map_or(1, |m| m as usize + 1);
    Alphabet::new(k).expect("letters fit the largest alphabet")
}

pub fn recursive_is_lyndon(w: &[Letter]) -> Result<bool> {
    recursive_member(Family::Lyndon, w)
}

pub fn recursive_is_nyldon(w: &[Letter]) -> Result<bool> {
    recursive_member(Family::Nyldon, w)
}

fn recursive_member(family: Family, w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let table = RecursiveMembership::build_with(family, alphabet_of(w), w.len(), Exec::Sequential)?;
    Ok(table.contains(w))
}

/// Every factorization of `w` into members of `table`'s family whose factors
/// satisfy `mono`.
pub fn factorizations_in(table: &RecursiveMembership, w: &[Letter], mono: Monotonicity) -> Vec<Factorization> {
    let n = w.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // Bit i of `cuts` set = cut between positions i and i+1.
    for cuts in 0u64..(1 << (n - 1)) {
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 0..n {
            if i == n - 1 || cuts >> i & 1 == 1 {
                pieces.push(&w[start..=i]);
                start = i + 1;
            }
        }
        if pieces.iter().all(|p| table.contains(p))
            && pieces.windows(2).all(|p| mono.allows(p[0], p[1]))
        {
            out.push(Factorization::from_parts(
                pieces.into_iter().map(Word::from).collect(),
                mono,
            ));
        }
    }
    out
}

/// All factorizations of `w` into `family` members satisfying `mono`, for
/// `|w| <= 10`.
pub fn exhaustive_factorizations(w: &[Letter], family: Family, mono: Monotonicity) -> Result<Vec<Factorization>> {
    exhaustive_factorizations_bounded(w, family, mono, DEFAULT_EXHAUSTIVE_BOUND)
}

pub fn exhaustive_factorizations_bounded(
    w: &[Letter],
    family: Family,
    mono: Monotonicity,
    bound: usize,
) -> Result<Vec<Factorization>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if w.len() > bound || w.len() > 63 {
        return Err(Error::BoundExceeded { len: w.len(), bound });
    }
    let table = RecursiveMembership::build_with(family, alphabet_of(w), w.len(), Exec::Sequential)?;
    Ok(factorizations_in(&table, w, mono))
}

/// Number of words of each length `1..=n_max` in `family`.
pub fn count_by_length(family: Family, alphabet: Alphabet, n_max: usize) -> Vec<u64> {
    count_by_length_with(family, alphabet, n_max, Exec::default())
}

pub fn count_by_length_with(family: Family, alphabet: Alphabet, n_max: usize, exec: Exec) -> Vec<u64> {
    (1..=n_max)
        .map(|n| family.words_of_length(alphabet, n, exec).len() as u64)
        .collect()
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of aperiodic necklaces of length `n` over `k` letters,
/// `(1/n) Σ_{d | n} μ(d) k^{n/d}` (Witt's formula; classical, not derived
/// from the factorization results it is checked against).
pub fn necklace_count(k: u64, n: u64) -> u64 {
    assert!(n >= 1);
    let total: i128 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (k as i128).pow((n / d) as u32))
        .sum();
    (total / n as i128) as u64
}

/// One row of the length-preserving bijection from non-Lyndon to non-Nyldon
/// words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionRow {
    pub source: Word,
    pub lyndon: Factorization,
    pub image: Word,
    pub nyldon: Factorization,
}

/// Maps every non-Lyndon word of length `n` to a non-Nyldon word of length
/// `n`. Each Lyndon factor of length `m` that is the `j`-th Lyndon word of
/// length `m` in decreasing order becomes the `j`-th Nyldon word of length
/// `m` in increasing order; the resulting multiset, sorted nondecreasingly, is
/// the Nyldon factorization of the image. Repeated factors map to repeated
/// images. Rows are listed in decreasing order of the source word.
pub fn counting_bijection(alphabet: Alphabet, n: usize) -> Result<Vec<BijectionRow>> {
    if n < 2 {
        return Err(Error::InvalidArgument("bijection needs n >= 2".into()));
    }
    let exec = Exec::default();
    let mut rank_map: HashMap<Word, Word> = HashMap::new();
    for m in 1..n {
        let mut lyndon = Family::Lyndon.words_of_length(alphabet, m, exec);
        lyndon.reverse();
        let nyldon = Family::Nyldon.words_of_length(alphabet, m, exec);
        if lyndon.len() != nyldon.len() {
            return Err(Error::InvalidArgument(format!(
                "length {m} has {} Lyndon but {} Nyldon words",
                lyndon.len(),
                nyldon.len()
            )));
        }
        rank_map.extend(lyndon.into_iter().zip(nyldon));
    }

    let mut sources: Vec<Word> = alphabet
        .words_of_length(n)
        .filter(|x| !Family::Lyndon.contains(x).expect("nonempty"))
        .collect();
    sources.reverse();

    let mut rows = Vec::with_capacity(sources.len());
    let mut images = BTreeSet::new();
    for source in sources {
        let lyndon = Family::Lyndon.factorize(&source)?;
        let mut factors: Vec<Word> = lyndon.factors().iter().map(|f| rank_map[f].clone()).collect();
        factors.sort();
        let nyldon = Factorization::from_parts(factors, Monotonicity::Nondecreasing);
        let image = nyldon.word();
        if Family::Nyldon.factorize(&image)? != nyldon || !images.insert(image.clone()) {
            return Err(Error::InvalidArgument(format!(
                "bijection breaks at {source}"
            )));
        }
        rows.push(BijectionRow {
            source,
            lyndon,
            image,
            nyldon,
        });
    }
    Ok(rows)
}

/// Every `C`-message with at most `max_blocks` codewords.
fn messages(code: &[Word], max_blocks: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_blocks {
        layer = layer
            .iter()
            .flat_map(|m| code.iter().map(move |c| Word::concat([m.letters(), c.letters()])))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Comma-freeness straight from the definition, over all messages of at most
/// `max_blocks` codewords and every split `u·x·v` of them.
pub fn comma_free_by_definition(code: &[Word], max_blocks: usize) -> bool {
    use crate::codes::{in_plus, in_star};
    messages(code, max_blocks).iter().all(|m| {
        (0..m.len()).all(|a| {
            (a + 1..=m.len()).all(|b| {
                let (u, x, v) = (&m[..a], &m[a..b], &m[b..]);
                !in_plus(x, code) || (in_star(u, code) && in_star(v, code))
            })
        })
    })
}

/// Circularity straight from the definition: every message `uv` of length at
/// most `max_total` with `vu` also a message must have `u, v` messages.
pub fn circular_by_definition(code: &[Word], max_total: usize) -> bool {
    use crate::codes::in_star;
    let shortest = code.iter().map(|c| c.len()).min().unwrap_or(1).max(1);
    messages(code, max_total / shortest)
        .iter()
        .filter(|m| m.len() <= max_total)
        .all(|m| {
            (1..m.len()).all(|i| {
                let (u, v) = m.split_at(i);
                let vu = Word::concat([v, u]);
                !in_star(&vu, code) || (in_star(u, code) && in_star(v, code))
            })
        })
}
