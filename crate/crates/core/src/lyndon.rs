//! Lyndon words: membership, Chen–Fox–Lyndon factorization (Duval's
//! algorithm), the Lyndon conjugate of a primitive word and enumeration.

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::word::{self, is_primitive, Alphabet, Factorization, Letter, Monotonicity, Word};

/// Factor boundaries of the Lyndon factorization, as `(start, end)` ranges.
fn duval_ranges(w: &[Letter]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push((i, i + j - k));
            i += j - k;
        }
    }
    out
}

/// The unique nonincreasing factorization of `w` into Lyndon words.
pub fn lyndon_factorize(w: &[Letter]) -> Result<Factorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let factors = duval_ranges(w)
        .into_iter()
        .map(|(a, b)| Word::from(&w[a..b]))
        .collect();
    Ok(Factorization::from_parts(factors, Monotonicity::Nonincreasing))
}

pub fn is_lyndon(w: &[Letter]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_lyndon_nonempty(w))
}

pub(crate) fn is_lyndon_nonempty(w: &[Letter]) -> bool {
    // A single Duval factor spanning the word.
    let n = w.len();
    let mut j = 1;
    let mut k = 0;
    while j < n && w[k] <= w[j] {
        if w[k] < w[j] {
            k = 0;
        } else {
            k += 1;
        }
        j += 1;
    }
    j == n && k == 0
}

/// Start of the lexicographically least rotation of `w`.
fn least_rotation_start(w: &[Letter]) -> usize {
    let n = w.len();
    let at = |i: usize| w[i % n];
    let mut i = 0;
    let mut ans = 0;
    while i < n {
        ans = i;
        let mut j = i + 1;
        let mut k = i;
        while j < 2 * n && at(k) <= at(j) {
            if at(k) < at(j) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    ans
}

/// The Lyndon word conjugate to a primitive word.
pub fn lyndon_conjugate(w: &[Letter]) -> Result<Word> {
    if !is_primitive(w) {
        return Err(Error::NotPrimitive(Word::from(w)));
    }
    Ok(word::rotation(w, least_rotation_start(w)))
}

pub fn lyndon_words_of_length(alphabet: Alphabet, len: usize, exec: Exec) -> Vec<Word> {
    word::words_of_length_where(alphabet, len, exec, is_lyndon_nonempty)
}

/// All Lyndon words of length `1..=max_len`, by length then lexicographically.
pub fn enumerate_lyndon(alphabet: Alphabet, max_len: usize) -> Vec<Word> {
    enumerate_lyndon_with(alphabet, max_len, Exec::default())
}

pub fn enumerate_lyndon_with(alphabet: Alphabet, max_len: usize, exec: Exec) -> Vec<Word> {
    word::words_up_to_where(alphabet, max_len, exec, is_lyndon_nonempty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{rotations, w};

    fn brute_is_lyndon(x: &[Letter]) -> bool {
        is_primitive(x) && rotations(x).unwrap().iter().all(|r| x <= r.letters())
    }

    #[test]
    fn membership_examples() {
        assert!(is_lyndon(&w("01")).unwrap());
        assert!(!is_lyndon(&w("0101")).unwrap());
        assert!(!is_lyndon(&w("10")).unwrap());
        assert!(is_lyndon(&w("0")).unwrap());
        assert!(is_lyndon(&w("0010111")).unwrap());
        assert_eq!(is_lyndon(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn factorization_examples() {
        let fac = |s: &str| lyndon_factorize(&w(s)).unwrap().to_string();
        assert_eq!(fac("1001"), "1|001");
        assert_eq!(fac("0110"), "011|0");
        assert_eq!(fac("1010"), "1|01|0");
        assert_eq!(fac("0101"), "01|01");
        assert_eq!(fac("0"), "0");
        assert_eq!(lyndon_factorize(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(lyndon_conjugate(&w("10")).unwrap(), w("01"));
        assert_eq!(lyndon_conjugate(&w("001")).unwrap(), w("001"));
        let u = w("01111011011111011110111");
        let brute = rotations(&u).unwrap().into_iter().min().unwrap();
        assert_eq!(lyndon_conjugate(&u).unwrap(), brute);
        assert!(matches!(lyndon_conjugate(&w("0101")), Err(Error::NotPrimitive(_))));
    }

    #[test]
    fn conjugate_matches_rotation_scan() {
        let a = Alphabet::new(3).unwrap();
        for len in 1..=8 {
            for x in a.words_of_length(len).filter(|x| is_primitive(x)) {
                let brute = rotations(&x).unwrap().into_iter().min().unwrap();
                assert_eq!(lyndon_conjugate(&x).unwrap(), brute, "{x}");
            }
        }
    }

    #[test]
    fn membership_matches_rotation_definition() {
        for (k, max) in [(2, 12), (3, 7)] {
            let a = Alphabet::new(k).unwrap();
            for len in 1..=max {
                for x in a.words_of_length(len) {
                    assert_eq!(is_lyndon_nonempty(&x), brute_is_lyndon(&x), "{x}");
                }
            }
        }
    }

    #[test]
    fn factorization_invariants_exhaustive() {
        let a = Alphabet::binary();
        for len in 1..=12 {
            for x in a.words_of_length(len) {
                let f = lyndon_factorize(&x).unwrap();
                assert_eq!(f.word(), x);
                assert!(f.factors().iter().all(|p| is_lyndon_nonempty(p)));
                assert!(f.factors().windows(2).all(|p| p[0] >= p[1]));
                assert_eq!(is_lyndon_nonempty(&x), f.len() == 1);
                let smaller_than_suffixes = (1..len).all(|i| x.letters() < &x[i..]);
                assert_eq!(is_lyndon_nonempty(&x), smaller_than_suffixes, "{x}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let a = Alphabet::binary();
        assert_eq!(enumerate_lyndon(a, 2), vec![w("0"), w("1"), w("01")]);
        let four = enumerate_lyndon(a, 4);
        assert_eq!(four.len(), 8);
        assert_eq!(&four[5..], &[w("0001"), w("0011"), w("0111")]);
        let counts: Vec<usize> = (1..=7)
            .map(|n| lyndon_words_of_length(a, n, Exec::default()).len())
            .collect();
        assert_eq!(counts, vec![2, 1, 2, 3, 6, 9, 18]);
        assert_eq!(
            enumerate_lyndon_with(a, 9, Exec::Sequential),
            enumerate_lyndon_with(a, 9, Exec::Parallel)
        );
    }

    #[test]
    fn lyndon_products_sit_between_factors() {
        let words = enumerate_lyndon(Alphabet::binary(), 6);
        for f in &words {
            for g in &words {
                let fg = Word::concat([f.letters(), g.letters()]);
                if is_lyndon_nonempty(&fg) {
                    assert!(f < &fg && &fg < g, "{f} {g}");
                }
            }
        }
    }
}
