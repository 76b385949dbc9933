use std::collections::BTreeSet;

use nyldon::lazard::{lazard_extract, lazard_run, lazard_stepcount_nyldon, LazardConfig, LazardTrace, Selector, Side};
use nyldon::lyndon::enumerate_lyndon;
use nyldon::nyldon::enumerate_nyldon;
use nyldon::word::{apply_permutation, w};
use nyldon::{Alphabet, Permutation, Word};

fn trace(side: Side, selector: Selector, k: usize, n: usize, pi: Option<Permutation>) -> LazardTrace {
    let mut config = LazardConfig::new(side, selector, Alphabet::new(k).unwrap(), n);
    if let Some(pi) = pi {
        config = config.with_permutation(pi);
    }
    lazard_run(&config).unwrap()
}

fn words(list: &str) -> Vec<Word> {
    list.split_whitespace().map(w).collect()
}

#[test]
fn twisted_runs_are_images_of_plain_runs() {
    for k in 2..=3 {
        let a = Alphabet::new(k).unwrap();
        let pi = Permutation::reverse(a);
        let n = if k == 2 { 7 } else { 4 };
        for side in [Side::Left, Side::Right] {
            for selector in [Selector::LexMin, Selector::LexMax] {
                let plain = trace(side, selector, k, n, None);
                let twisted = trace(side, selector, k, n, Some(pi.clone()));
                let image: Vec<Word> = plain.eliminated().iter().map(|u| apply_permutation(&pi, u)).collect();
                assert_eq!(twisted.eliminated(), image, "{side} {selector:?} k={k}");
            }
        }
    }
}

#[test]
fn left_max_is_left_min_under_reversal() {
    let a = Alphabet::binary();
    for n in 1..=8 {
        let max = trace(Side::Left, Selector::LexMax, 2, n, None);
        let twisted_min = trace(Side::Left, Selector::LexMin, 2, n, Some(Permutation::reverse(a)));
        assert_eq!(max.eliminated(), twisted_min.eliminated(), "n={n}");
    }
}

#[test]
fn right_max_under_reversal_pinned() {
    // Strictly decreasing in the reversed order and equal to the reversal of
    // the right/lex-max run.
    let t = trace(Side::Right, Selector::LexMax, 2, 5, Some(Permutation::reverse(Alphabet::binary())));
    assert_eq!(
        t.eliminated(),
        words("0 10000 1000 100 10100 10 11000 1100 11010 110 11100 1110 11110 1")
    );
    assert_eq!(t.steps[7].snapshot, words("1 110 1100 11010"));
}

#[test]
fn right_max_column() {
    let t = trace(Side::Right, Selector::LexMax, 2, 5, None);
    assert_eq!(
        t.eliminated(),
        words("1 01111 0111 011 01011 01 00111 0011 00101 001 00011 0001 00001 0")
    );
}

#[test]
fn right_min_is_increasing_and_nyldon() {
    for (k, n) in [(2, 9), (3, 5)] {
        let a = Alphabet::new(k).unwrap();
        let t = trace(Side::Right, Selector::LexMin, k, n, None);
        let out = t.eliminated();
        assert!(out.windows(2).all(|p| p[0] < p[1]));
        let nyldon: BTreeSet<Word> = enumerate_nyldon(a, n).into_iter().collect();
        assert_eq!(lazard_extract(&t).unwrap(), nyldon);
        assert!(t.snapshots_are_free());
    }
}

#[test]
fn extracted_sets_and_freeness() {
    for n in 1..=8 {
        let a = Alphabet::binary();
        let lyndon: BTreeSet<Word> = enumerate_lyndon(a, n).into_iter().collect();
        for (side, selector) in [(Side::Left, Selector::LexMin), (Side::Right, Selector::LexMax)] {
            let t = trace(side, selector, 2, n, None);
            assert_eq!(lazard_extract(&t).unwrap(), lyndon, "{side} n={n}");
            assert!(t.snapshots_are_free());
        }
        assert!(trace(Side::Left, Selector::LexMax, 2, n, None).snapshots_are_free());
    }
}

/// Triples `(f, g, fg)` inside `set`.
fn products(set: &BTreeSet<Word>) -> Vec<(Word, Word, Word)> {
    let mut out = Vec::new();
    for f in set {
        for g in set {
            let fg = Word::concat([f.letters(), g.letters()]);
            if set.contains(&fg) {
                out.push((f.clone(), g.clone(), fg));
            }
        }
    }
    out
}

#[test]
fn viennot_conditions() {
    let a = Alphabet::binary();
    let lyndon: BTreeSet<Word> = enumerate_lyndon(a, 10).into_iter().collect();
    // Lyndon order is lexicographic: f < fg < g.
    for (f, g, fg) in products(&lyndon) {
        assert!(f < fg && fg < g, "{f} {g}");
    }
    // Nyldon order is reversed lexicographic. The right condition holds.
    let nyldon: BTreeSet<Word> = enumerate_nyldon(a, 10).into_iter().collect();
    let triples = products(&nyldon);
    for (f, g, fg) in &triples {
        assert!(g < fg, "{f} {g}");
    }
    // The left condition does not.
    let breaking: Vec<_> = triples.iter().filter(|(f, _, fg)| f < fg).collect();
    assert!(!breaking.is_empty());
    assert_eq!(breaking[0], &(w("1"), w("0"), w("10")));
}

#[test]
fn stepcount_pins() {
    let a = Alphabet::binary();
    assert_eq!(lazard_stepcount_nyldon(a, 5).unwrap(), (4, 14));
    assert_eq!(lazard_stepcount_nyldon(a, 7).unwrap(), (29, 41));
}
