//! Derivations behind the frozen constants used in unit tests: each value
//! asserted verbatim elsewhere is recomputed here from an independent
//! pipeline (rewriting enumeration or exhaustive products of generators).

use std::collections::BTreeSet;

use num_rational::Ratio;

use factorlen_core::bn::{self, BnElement, BnLetter};
use factorlen_core::fp::{self, Caps, Presentation};
use factorlen_core::lengthsets::{union_containing, LengthSet};

/// Source of the `{6, ..., 10} -> 5/3` elasticity value: the tenth power of
/// `b` with modulus three, enumerated by rewriting rather than closed form.
#[test]
fn elasticity_five_thirds_comes_from_a_rewriting_class() {
    let p = Presentation::bn(3);
    let seed = p.parse_word(&"b".repeat(10)).unwrap();
    let (lengths, complete) = fp::length_set_of(&seed, &p, Caps::default()).unwrap();
    assert!(complete);
    assert_eq!(lengths, LengthSet::new(6..=10).unwrap());
    assert_eq!(lengths.elasticity(), Ratio::new(5, 3));

    let closed = BnElement::new(3, 0, 10).unwrap().length_set();
    assert_eq!(closed, lengths);
}

/// A length belongs to the k-th union exactly when some product of k
/// generators realizes it, so the unions can be rebuilt from all words of a
/// fixed length.
fn union_from_products(ell: u32, n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for code in 0..(1u64 << ell) {
        let word: Vec<BnLetter> = (0..ell)
            .map(|bit| {
                if code >> bit & 1 == 0 {
                    BnLetter::A
                } else {
                    BnLetter::B
                }
            })
            .collect();
        let element = BnElement::normalize(n, &word).unwrap();
        out.extend(element.length_set().iter());
    }
    out
}

#[test]
fn unions_match_products_of_generators() {
    for n in 3..=6 {
        for ell in 2..=7u32 {
            let expected = union_from_products(ell, n);
            let got: BTreeSet<u64> = bn::union_lengths(u64::from(ell), n).unwrap().iter().collect();
            assert_eq!(got, expected, "modulus {n}, {ell} generators");
        }
    }
    // The worked CLI example: modulus 3, four generators.
    assert_eq!(
        bn::union_lengths(4, 3).unwrap(),
        LengthSet::new(3..=7).unwrap()
    );
}

/// Third union for modulus four, assembled a second way: collect length sets
/// of every normal form in a grid wide enough to hold all contributors, then
/// take the union of those containing three.  Enumeration is by rewriting,
/// so the closed form is not involved on this side.
#[test]
fn union_of_three_cross_checked_by_rewriting() {
    let p = Presentation::bn(4);
    let mut family = Vec::new();
    for k in 0..=12u64 {
        for m in 0..=(12 - k) {
            if k + m == 0 {
                continue;
            }
            let text = "a".repeat(k as usize) + &"b".repeat(m as usize);
            let seed = p.parse_word(&text).unwrap();
            let (lengths, complete) = fp::length_set_of(&seed, &p, Caps::default()).unwrap();
            assert!(complete, "truncated class at a^{k} b^{m}");
            family.push(lengths);
        }
    }
    let assembled = union_containing(&family, 3).expect("some set contains 3");
    assert_eq!(assembled, bn::union_lengths(3, 4).unwrap());
}
