use nyldon::codes::{self, is_circular_bounded, is_comma_free_uniform};
use nyldon::conjugacy::{melancon_nyldon_conjugate, nyldon_conjugate_bruteforce};
use nyldon::nyldon::{is_nyldon, nyldon_factorize};
use nyldon::oracle::{circular_by_definition, comma_free_by_definition, factorizations_in, RecursiveMembership};
use nyldon::word::is_primitive;
use nyldon::{Alphabet, Exec, Family, Word};
use proptest::prelude::*;

fn all_words(a: Alphabet, len: usize) -> impl Iterator<Item = Word> {
    (0..a.count_of_length(len).unwrap()).map(move |r| a.word_at(len, r))
}

#[test]
fn recursive_definition_matches_fast_membership() {
    for family in [Family::Lyndon, Family::Nyldon] {
        for (k, max_len) in [(2, 12), (3, 8), (4, 6)] {
            let a = Alphabet::new(k).unwrap();
            let table = RecursiveMembership::build(family, a, max_len).unwrap();
            for len in 1..=max_len {
                for x in all_words(a, len) {
                    assert_eq!(table.contains(&x), family.contains(&x).unwrap(), "{family} {x}");
                }
            }
        }
    }
}

#[test]
fn factorizations_are_unique() {
    for family in [Family::Lyndon, Family::Nyldon] {
        for (k, max_len) in [(2, 10), (3, 6)] {
            let a = Alphabet::new(k).unwrap();
            let table = RecursiveMembership::build(family, a, max_len).unwrap();
            for len in 1..=max_len {
                for x in all_words(a, len) {
                    let all = factorizations_in(&table, &x, family.monotonicity());
                    assert_eq!(all, vec![family.factorize(&x).unwrap()], "{family} {x}");
                }
            }
        }
    }
}

#[test]
fn no_power_is_nyldon() {
    let a = Alphabet::binary();
    for base_len in 1..=7 {
        for u in all_words(a, base_len) {
            for m in 2..=14 / base_len {
                assert!(!is_nyldon(&u.pow(m)).unwrap(), "{u}^{m}");
            }
        }
    }
}

#[test]
fn fast_comma_free_matches_definition() {
    for (k, n_max) in [(2, 7), (3, 3), (4, 2)] {
        let a = Alphabet::new(k).unwrap();
        for n in 1..=n_max {
            let code = Family::Nyldon.words_of_length(a, n, Exec::Sequential);
            let verdict = is_comma_free_uniform(&code).unwrap();
            assert_eq!(verdict.holds, comma_free_by_definition(&code, 2), "k={k} n={n}");
            if let Some(witness) = &verdict.witness {
                assert!(codes::witness_is_valid(witness, &code));
            }
        }
    }
}

#[test]
fn comma_free_codes_are_circular() {
    for (k, n) in [(2, 3), (2, 4), (2, 5), (2, 6), (3, 2)] {
        let code = Family::Nyldon.words_of_length(Alphabet::new(k).unwrap(), n, Exec::Sequential);
        assert!(is_comma_free_uniform(&code).unwrap().holds);
        assert!(is_circular_bounded(&code, 4 * n).unwrap().holds, "k={k} n={n}");
    }
}

#[test]
fn circular_graph_matches_definition() {
    for n in 2..=3 {
        let all: Vec<Word> = all_words(Alphabet::binary(), n).collect();
        let bound = 4 * n;
        for mask in 1u32..(1 << all.len()) {
            let code: Vec<Word> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i].clone()).collect();
            let verdict = is_circular_bounded(&code, bound).unwrap();
            assert_eq!(verdict.holds, circular_by_definition(&code, bound), "{code:?}");
            if let Some(witness) = &verdict.witness {
                assert!(codes::witness_is_valid(witness, &code));
            }
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let a = Alphabet::new(3).unwrap();
    for family in [Family::Lyndon, Family::Nyldon] {
        assert_eq!(family.enumerate(a, 8, Exec::Sequential), family.enumerate(a, 8, Exec::Parallel));
    }
    let code = Family::Nyldon.words_of_length(Alphabet::binary(), 8, Exec::Sequential);
    assert_eq!(
        codes::is_circular_bounded_with(&code, 24, Exec::Sequential).unwrap(),
        codes::is_circular_bounded_with(&code, 24, Exec::Parallel).unwrap()
    );
}

proptest! {
    #[test]
    fn melancon_matches_bruteforce(letters in prop::collection::vec(0u8..4, 1..40)) {
        prop_assume!(is_primitive(&letters));
        prop_assert_eq!(
            melancon_nyldon_conjugate(&letters).unwrap(),
            nyldon_conjugate_bruteforce(&letters).unwrap()
        );
    }

    #[test]
    fn nyldon_factors_are_nondecreasing_nyldon(letters in prop::collection::vec(0u8..3, 1..60)) {
        let f = nyldon_factorize(&letters).unwrap();
        prop_assert_eq!(f.word(), Word::from(letters.clone()));
        prop_assert!(f.factors().windows(2).all(|p| p[0] <= p[1]));
        for factor in f.factors() {
            prop_assert!(is_nyldon(factor).unwrap());
        }
    }
}
