//! Comma-free and circular code checks for sets of words of one common
//! length.
//!
//! For a uniform code `C` of length `n`, a codeword occurring strictly inside
//! a message `y_1 ⋯ y_ℓ` overlaps at most two consecutive blocks, so `C` is
//! comma-free iff no codeword occurs at an offset `1..n` of some `yz` with
//! `y, z ∈ C`.
//!
//! Circular codes are checked only up to a bound on `|uv|`. A counterexample
//! `uv, vu ∈ C*` with `|u| ≢ 0 (mod n)` corresponds to a cyclic sequence of
//! codewords `y_1 → y_2 → ⋯ → y_m → y_1` where each `y_j[r..]·y_{j+1}[..r]` is
//! again a codeword, `r = |u| mod n`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::par::{self, Exec};
use crate::word::{format_word, Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `u·x·v ∈ C*` with `x ∈ C+` but `u` or `v` not in `C*`.
    CommaFree { u: Word, x: Word, v: Word },
    /// `uv, vu ∈ C*` but `u` or `v` not in `C*`.
    Circular { u: Word, v: Word },
}

impl Witness {
    /// `u(x)v` for comma-free witnesses, `u=… v=…` for circular ones.
    pub fn render(&self, alphabet: Alphabet) -> String {
        let f = |x: &Word| format_word(x, alphabet);
        match self {
            Witness::CommaFree { u, x, v } => format!("{}({}){}", f(u), f(x), f(v)),
            Witness::Circular { u, v } => format!("u={} v={}", f(u), f(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CodeVerdict {
    fn holds() -> Self {
        CodeVerdict {
            holds: true,
            witness: None,
        }
    }

    fn fails(witness: Witness) -> Self {
        CodeVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for CodeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "holds"),
            Some(w) => write!(f, "fails: {}", w.render(Alphabet::new(10).expect("valid"))),
        }
    }
}

/// Common length of the code words.
fn uniform_length(code: &[Word]) -> Result<usize> {
    let n = code.first().map_or(0, |c| c.len());
    if n == 0 || code.iter().any(|c| c.len() != n) {
        return Err(Error::NonUniformCode);
    }
    Ok(n)
}

/// Membership in `C*` for an arbitrary finite set of nonempty words.
pub fn in_star(w: &[Letter], code: &[Word]) -> bool {
    let set: HashSet<&[Letter]> = code.iter().map(|c| c.letters()).collect();
    let mut lengths: Vec<usize> = code.iter().map(|c| c.len()).filter(|&l| l > 0).collect();
    lengths.sort_unstable();
    lengths.dedup();
    let mut reachable = vec![false; w.len() + 1];
    reachable[0] = true;
    for i in 0..w.len() {
        if !reachable[i] {
            continue;
        }
        for &l in &lengths {
            if i + l <= w.len() && set.contains(&w[i..i + l]) {
                reachable[i + l] = true;
            }
        }
    }
    reachable[w.len()]
}

/// Membership in `C+`.
pub fn in_plus(w: &[Letter], code: &[Word]) -> bool {
    !w.is_empty() && in_star(w, code)
}

/// Re-checks a witness against the definitions of comma-free and circular
/// codes.
pub fn witness_is_valid(witness: &Witness, code: &[Word]) -> bool {
    match witness {
        Witness::CommaFree { u, x, v } => {
            let uxv = Word::concat([u.letters(), x.letters(), v.letters()]);
            in_plus(x, code) && in_star(&uxv, code) && !(in_star(u, code) && in_star(v, code))
        }
        Witness::Circular { u, v } => {
            let uv = Word::concat([u.letters(), v.letters()]);
            let vu = Word::concat([v.letters(), u.letters()]);
            in_star(&uv, code) && in_star(&vu, code) && !(in_star(u, code) && in_star(v, code))
        }
    }
}

/// Comma-freeness of a uniform-length code.
pub fn is_comma_free_uniform(code: &[Word]) -> Result<CodeVerdict> {
    let n = uniform_length(code)?;
    let mut sorted = code.to_vec();
    sorted.sort();
    sorted.dedup();
    for offset in 1..n {
        let mut by_suffix: HashMap<&[Letter], &Word> = HashMap::new();
        let mut by_prefix: HashMap<&[Letter], &Word> = HashMap::new();
        for c in &sorted {
            by_suffix.entry(&c[offset..]).or_insert(c);
            by_prefix.entry(&c[..offset]).or_insert(c);
        }
        for c in &sorted {
            let (head, tail) = c.split_at(n - offset);
            if let (Some(y), Some(z)) = (by_suffix.get(head), by_prefix.get(tail)) {
                return Ok(CodeVerdict::fails(Witness::CommaFree {
                    u: Word::from(&y[..offset]),
                    x: c.clone(),
                    v: Word::from(&z[offset..]),
                }));
            }
        }
    }
    Ok(CodeVerdict::holds())
}

/// Known classification: the Nyldon words of length `n` over `k` letters are
/// comma-free iff `n = 1`, or `n = 2` and `k ∈ {2, 3}`, or `n ∈ 3..=6` and
/// `k = 2`.
pub fn nyldon_comma_free_predicate(k: usize, n: usize) -> bool {
    n == 1 || (n == 2 && (k == 2 || k == 3)) || ((3..=6).contains(&n) && k == 2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub k: usize,
    pub n: usize,
    pub verdict: CodeVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommaFreeTable {
    pub k_max: usize,
    pub n_max: usize,
    pub entries: Vec<TableEntry>,
}

impl CommaFreeTable {
    pub fn get(&self, k: usize, n: usize) -> Option<&CodeVerdict> {
        self.entries
            .iter()
            .find(|e| e.k == k && e.n == n)
            .map(|e| &e.verdict)
    }

    /// Entries whose verdict disagrees with [`nyldon_comma_free_predicate`].
    pub fn disagreements(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .filter(|e| e.verdict.holds != nyldon_comma_free_predicate(e.k, e.n))
            .map(|e| (e.k, e.n))
            .collect()
    }
}

/// Comma-free verdicts for `N ∩ A^n`, `k = 2..=k_max`, `n = 1..=n_max`.
pub fn nyldon_comma_free_table(k_max: usize, n_max: usize) -> Result<CommaFreeTable> {
    if k_max < 2 || n_max < 1 {
        return Err(Error::InvalidArgument(
            "table needs k_max >= 2 and n_max >= 1".into(),
        ));
    }
    let mut entries = Vec::new();
    for k in 2..=k_max {
        let alphabet = Alphabet::new(k)?;
        for n in 1..=n_max {
            let code = Family::Nyldon.words_of_length(alphabet, n, Exec::default());
            entries.push(TableEntry {
                k,
                n,
                verdict: is_comma_free_uniform(&code)?,
            });
        }
    }
    Ok(CommaFreeTable {
        k_max,
        n_max,
        entries,
    })
}

/// Bitset adjacency for one residue `r`: `y → z` iff `y[r..]·z[..r] ∈ C`.
struct ShiftGraph {
    words_per_row: usize,
    rows: Vec<u64>,
}

impl ShiftGraph {
    fn build(code: &[Word], r: usize) -> Self {
        let n = code[0].len();
        let size = code.len();
        let words_per_row = size.div_ceil(64);
        let mut rows = vec![0u64; size * words_per_row];
        // Codeword heads of length n - r, and the tails that may follow them.
        let mut tails_by_head: HashMap<&[Letter], Vec<&[Letter]>> = HashMap::new();
        for c in code {
            let (head, tail) = c.split_at(n - r);
            tails_by_head.entry(head).or_default().push(tail);
        }
        let mut by_prefix: HashMap<&[Letter], Vec<usize>> = HashMap::new();
        for (j, z) in code.iter().enumerate() {
            by_prefix.entry(&z[..r]).or_default().push(j);
        }
        for (i, y) in code.iter().enumerate() {
            let Some(tails) = tails_by_head.get(&y[r..]) else {
                continue;
            };
            for tail in tails {
                for &j in by_prefix.get(tail).map(Vec::as_slice).unwrap_or(&[]) {
                    rows[i * words_per_row + j / 64] |= 1 << (j % 64);
                }
            }
        }
        ShiftGraph {
            words_per_row,
            rows,
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn has_edge(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    /// Length of the shortest closed walk through `start`, if at most `limit`.
    fn shortest_cycle(&self, start: usize, limit: usize) -> Option<usize> {
        let mut visited = vec![0u64; self.words_per_row];
        let mut frontier = vec![start];
        for depth in 1..=limit {
            let mut next = vec![0u64; self.words_per_row];
            for &f in &frontier {
                for (acc, bits) in next.iter_mut().zip(self.row(f)) {
                    *acc |= bits;
                }
            }
            if next[start / 64] >> (start % 64) & 1 == 1 {
                return Some(depth);
            }
            frontier.clear();
            for (idx, (bits, seen)) in next.iter().zip(visited.iter_mut()).enumerate() {
                let mut fresh = bits & !*seen;
                *seen |= bits;
                while fresh != 0 {
                    frontier.push(idx * 64 + fresh.trailing_zeros() as usize);
                    fresh &= fresh - 1;
                }
            }
            if frontier.is_empty() {
                return None;
            }
        }
        None
    }

    /// A closed walk of exactly `len` edges from `start`.
    fn cycle_path(&self, start: usize, len: usize) -> Vec<usize> {
        fn go(g: &ShiftGraph, path: &mut Vec<usize>, start: usize, len: usize) -> bool {
            let at = *path.last().expect("nonempty");
            if path.len() == len {
                return g.has_edge(at, start);
            }
            let size = g.words_per_row * 64;
            for next in (0..size).filter(|&j| g.has_edge(at, j)) {
                path.push(next);
                if go(g, path, start, len) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = vec![start];
        let found = go(self, &mut path, start, len);
        debug_assert!(found);
        path
    }
}

/// Searches for a circular-code counterexample with `|uv| <= max_total`.
/// A passing verdict is evidence only.
pub fn is_circular_bounded(code: &[Word], max_total: usize) -> Result<CodeVerdict> {
    is_circular_bounded_with(code, max_total, Exec::default())
}

pub fn is_circular_bounded_with(code: &[Word], max_total: usize, exec: Exec) -> Result<CodeVerdict> {
    let n = uniform_length(code)?;
    if max_total < 2 * n {
        return Err(Error::InvalidArgument(format!(
            "bound {max_total} is below twice the code length {n}"
        )));
    }
    let mut sorted = code.to_vec();
    sorted.sort();
    sorted.dedup();
    let limit = max_total / n;
    for r in 1..n {
        let graph = ShiftGraph::build(&sorted, r);
        let lengths = par::map_range(exec, 0..sorted.len() as u64, |s| {
            graph.shortest_cycle(s as usize, limit)
        });
        let best = lengths
            .iter()
            .enumerate()
            .filter_map(|(s, len)| len.map(|l| (l, s)))
            .min();
        if let Some((len, start)) = best {
            let path = graph.cycle_path(start, len);
            let u = Word::from(&sorted[path[0]][..r]);
            let mut v = sorted[path[0]][r..].to_vec();
            for &j in &path[1..] {
                v.extend_from_slice(&sorted[j]);
            }
            return Ok(CodeVerdict::fails(Witness::Circular { u, v: Word::new(v) }));
        }
    }
    Ok(CodeVerdict::holds())
}
