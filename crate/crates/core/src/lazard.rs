//! Left and right Lazard elimination, truncated to words of length at most
//! `n`.
//!
//! Starting from `Y_1 = A`, each step removes the extremal word `u` of the
//! current set and rewrites the rest as `u*·y` (left) or `y·u*` (right),
//! keeping only words of length at most `n`. The run stops once a single word
//! remains; that word is the last one eliminated.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::nyldon::enumerate_nyldon;
use crate::word::{format_word, Alphabet, Letter, Permutation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Selector {
    LexMin,
    LexMax,
}

#[derive(Debug, Clone)]
pub struct LazardConfig {
    pub side: Side,
    pub selector: Selector,
    pub alphabet: Alphabet,
    pub max_len: usize,
    /// Letter order `π(0) < π(1) < ...` for the selector; identity if `None`.
    pub permutation: Option<Permutation>,
    /// Defaults to `4·|A^{≤n}|`.
    pub step_cap: Option<usize>,
}

impl LazardConfig {
    pub fn new(side: Side, selector: Selector, alphabet: Alphabet, max_len: usize) -> Self {
        LazardConfig {
            side,
            selector,
            alphabet,
            max_len,
            permutation: None,
            step_cap: None,
        }
    }

    pub fn with_permutation(mut self, pi: Permutation) -> Self {
        self.permutation = Some(pi);
        self
    }

    pub fn with_step_cap(mut self, cap: usize) -> Self {
        self.step_cap = Some(cap);
        self
    }

    fn default_cap(&self) -> usize {
        let k = self.alphabet.size();
        let mut total = 0usize;
        let mut power = 1usize;
        for _ in 0..self.max_len {
            power = power.saturating_mul(k);
            total = total.saturating_add(power);
        }
        total.saturating_mul(4)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazardStep {
    /// `Y_i ∩ A^{≤n}`, lexicographically sorted.
    pub snapshot: Vec<Word>,
    pub chosen: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LazardTrace {
    pub side: Side,
    pub selector: Selector,
    pub permutation: Option<Permutation>,
    pub max_len: usize,
    pub steps: Vec<LazardStep>,
}

impl LazardTrace {
    /// `u_1, u_2, ...` in elimination order.
    pub fn eliminated(&self) -> Vec<Word> {
        self.steps.iter().map(|s| s.chosen.clone()).collect()
    }

    /// Whether every snapshot is prefix-free (left side) or suffix-free
    /// (right side).
    pub fn snapshots_are_free(&self) -> bool {
        self.steps.iter().all(|step| {
            step.snapshot.iter().all(|x| {
                step.snapshot.iter().all(|y| {
                    x == y
                        || match self.side {
                            Side::Left => !y.starts_with(x),
                            Side::Right => !y.ends_with(x),
                        }
                })
            })
        })
    }

    /// One line per step: `i | {Y_i ∩ A^{≤n}} | u_i`.
    pub fn render(&self, alphabet: Alphabet) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            let set: Vec<String> = step.snapshot.iter().map(|x| format_word(x, alphabet)).collect();
            out.push_str(&format!(
                "{} | {{{}}} | {}\n",
                i + 1,
                set.join(", "),
                format_word(&step.chosen, alphabet)
            ));
        }
        out
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

fn select(set: &BTreeSet<Word>, selector: Selector, pi: Option<&Permutation>) -> Word {
    let cmp = |a: &&Word, b: &&Word| -> Ordering {
        match pi {
            Some(p) => p.twisted_cmp(a, b),
            None => a.cmp(b),
        }
    };
    let pick = match selector {
        Selector::LexMin => set.iter().min_by(cmp),
        Selector::LexMax => set.iter().max_by(cmp),
    };
    pick.expect("nonempty set").clone()
}

fn rewrite(set: &BTreeSet<Word>, u: &[Letter], side: Side, max_len: usize) -> BTreeSet<Word> {
    let mut next = BTreeSet::new();
    for y in set.iter().filter(|y| y.letters() != u) {
        let mut current: Vec<Letter> = y.to_vec();
        while current.len() <= max_len {
            next.insert(Word::from(current.as_slice()));
            current = match side {
                Side::Left => [u, current.as_slice()].concat(),
                Side::Right => [current.as_slice(), u].concat(),
            };
        }
    }
    next
}

pub fn lazard_run(config: &LazardConfig) -> Result<LazardTrace> {
    if config.max_len == 0 {
        return Err(Error::InvalidArgument("length bound must be at least 1".into()));
    }
    if let Some(pi) = &config.permutation {
        if pi.size() != config.alphabet.size() {
            return Err(Error::InvalidPermutation {
                size: config.alphabet.size(),
            });
        }
    }
    let cap = config.step_cap.unwrap_or_else(|| config.default_cap());
    let mut set: BTreeSet<Word> = config
        .alphabet
        .letters()
        .map(|a| Word::new(vec![a]))
        .collect();
    let mut steps = Vec::new();
    loop {
        if steps.len() >= cap {
            return Err(Error::StepCapExceeded { cap });
        }
        let chosen = match set.len() {
            0 => return Err(Error::EmptyElimination),
            1 => set.iter().next().expect("singleton").clone(),
            _ => select(&set, config.selector, config.permutation.as_ref()),
        };
        let done = set.len() == 1;
        let next = if done {
            BTreeSet::new()
        } else {
            rewrite(&set, &chosen, config.side, config.max_len)
        };
        steps.push(LazardStep {
            snapshot: set.iter().cloned().collect(),
            chosen,
        });
        if done {
            break;
        }
        set = next;
    }
    Ok(LazardTrace {
        side: config.side,
        selector: config.selector,
        permutation: config.permutation.clone(),
        max_len: config.max_len,
        steps,
    })
}

/// The eliminated words as a set; a repeated word means the selector does not
/// produce a Lazard set at this length.
pub fn lazard_extract(trace: &LazardTrace) -> Result<BTreeSet<Word>> {
    let mut out = BTreeSet::new();
    for u in trace.eliminated() {
        if !out.insert(u.clone()) {
            return Err(Error::DuplicateElimination(u));
        }
    }
    Ok(out)
}

/// `(j, k)` where `k` is the number of Nyldon words of length at most `n`
/// and `j` the first step of the right/lex-min elimination by which all of
/// them have appeared in some `Y_i ∩ A^{≤n}`, `i ≤ j`.
pub fn lazard_stepcount_nyldon(alphabet: Alphabet, max_len: usize) -> Result<(usize, usize)> {
    let trace = lazard_run(&LazardConfig::new(Side::Right, Selector::LexMin, alphabet, max_len))?;
    let nyldon: BTreeSet<Word> = enumerate_nyldon(alphabet, max_len).into_iter().collect();
    let mut seen = BTreeSet::new();
    for (i, step) in trace.steps.iter().enumerate() {
        seen.extend(step.snapshot.iter().filter(|x| nyldon.contains(*x)).cloned());
        if seen.len() == nyldon.len() {
            return Ok((i + 1, nyldon.len()));
        }
    }
    Err(Error::InvalidArgument(
        "elimination finished without producing every Nyldon word".into(),
    ))
}
