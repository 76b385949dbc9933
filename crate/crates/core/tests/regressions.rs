use nyldon::nyldon::{is_nyldon, nyldon_factorize};
use nyldon::word::w;
use nyldon::Word;

fn cat(parts: &[&Word]) -> Word {
    Word::concat(parts.iter().map(|p| p.letters()))
}

/// The cube of u: the factor after `y·1⁻¹` is `1px`, not `px` (which starts
/// with 0 and so is not Nyldon).
#[test]
fn cube_factorization() {
    let u = w("01111011011111011110111");
    let p = w("0111101");
    let s = w("1011111011110111");
    let x = w("101111");
    let y = w("1011110111");
    let px = cat(&[&p, &x]);
    assert!(!is_nyldon(&px).unwrap());
    let mut expected: Vec<Word> = ["0", "1", "1", "1", "101"].into_iter().map(w).collect();
    expected.extend([
        x.clone(),
        Word::from(&y[..y.len() - 1]),
        cat(&[&w("1"), &p, &x]),
        cat(&[&y, &p]),
        s.clone(),
    ]);
    assert_eq!(nyldon_factorize(&u.pow(3)).unwrap().factors(), expected);
}

#[test]
fn higher_powers_repeat_the_conjugate() {
    let u = w("01111011011111011110111");
    let n = w("10111101101111101111011");
    for k in 4..=9 {
        let f = nyldon_factorize(&u.pow(k)).unwrap();
        assert_eq!(f.len(), 10 + (k - 4), "k={k}");
        assert!(f.factors()[7..7 + (k - 4)].iter().all(|factor| factor == &n));
    }
}
