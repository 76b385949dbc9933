//! Primitive conjugacy classes: every primitive word has exactly one Nyldon
//! rotation. Computed here by brute force and by Mélançon's block-merging
//! procedure for right Hall sets.

use crate::error::{Error, Result};
use crate::lyndon::{is_lyndon_nonempty, lyndon_conjugate};
use crate::nyldon::is_nyldon_nonempty;
use crate::word::{is_primitive, rotation, Letter, Word};

/// The Nyldon rotation of a primitive word, found by testing every rotation.
pub fn nyldon_conjugate_bruteforce(w: &[Letter]) -> Result<Word> {
    if !is_primitive(w) {
        return Err(Error::NotPrimitive(Word::from(w)));
    }
    let mut found = (0..w.len())
        .map(|i| rotation(w, i))
        .filter(|r| is_nyldon_nonempty(r));
    match (found.next(), found.count()) {
        (Some(r), 0) => Ok(r),
        (first, rest) => Err(Error::ConjugacyViolation {
            word: Word::from(w),
            found: first.map_or(0, |_| 1 + rest),
        }),
    }
}

/// The Nyldon rotation of a primitive word via Mélançon's algorithm.
///
/// `blocks` starts as the letters of `w`. Each outer pass fixes `least`, the
/// smallest block present at the start of the pass, then
///
/// 1. if the first block is `least` and smaller than the last block, it is
///    appended to the last block (a rotation of the circular word);
/// 2. scanning left to right, every `least` block that is smaller than its
///    left neighbour is merged into that neighbour. After a merge the scan
///    resumes one block past the merged pair, so a run `x·least·least` needs
///    a further pass to absorb the second copy.
///
/// Passes repeat until a single block remains. Indices below are 0-based
/// versions of the 1-based `i`/`j` bookkeeping of the original pseudocode;
/// `j` only mirrors `i` and both advance together.
pub fn melancon_nyldon_conjugate(w: &[Letter]) -> Result<Word> {
    if !is_primitive(w) {
        return Err(Error::NotPrimitive(Word::from(w)));
    }
    let mut blocks: Vec<Word> = w.iter().map(|&a| Word::new(vec![a])).collect();
    while blocks.len() > 1 {
        let before = blocks.len();
        let least = blocks.iter().min().expect("nonempty").clone();

        let last = blocks.len() - 1;
        if blocks[0] == least && blocks[0] < blocks[last] {
            let head = blocks.remove(0);
            blocks.last_mut().expect("nonempty").0.extend_from_slice(&head);
        }

        let mut i = 1;
        while i < blocks.len() {
            while i < blocks.len() && blocks[i] != least {
                i += 1;
            }
            if i < blocks.len() && blocks[i] < blocks[i - 1] {
                let merged = blocks.remove(i);
                blocks[i - 1].0.extend_from_slice(&merged);
            }
            i += 1;
        }

        // Every pass merges at least one block for primitive input.
        if blocks.len() == before {
            return Err(Error::ConjugacyViolation {
                word: Word::from(w),
                found: 0,
            });
        }
    }
    Ok(blocks.pop().expect("one block"))
}

pub fn lyndon_to_nyldon(l: &[Letter]) -> Result<Word> {
    if l.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_lyndon_nonempty(l) {
        return Err(Error::NotLyndon(Word::from(l)));
    }
    melancon_nyldon_conjugate(l)
}

pub fn nyldon_to_lyndon(n: &[Letter]) -> Result<Word> {
    if n.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !is_nyldon_nonempty(n) {
        return Err(Error::NotNyldon(Word::from(n)));
    }
    lyndon_conjugate(n)
}
