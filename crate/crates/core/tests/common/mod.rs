#![allow(dead_code)]

use proptest::prelude::*;
use sqpbraid::band_words::{parse_band_word, BandLetter, BandWord, Sign};
use sqpbraid::fence::seifert_graph;

pub const TREFOIL: &str = "strands: 2\na(1,2) a(1,2) a(1,2)";
pub const FIGURE_EIGHT: &str = "strands: 3\na(1,2) a(2,3)^-1 a(1,2) a(2,3)^-1";
pub const TREFOIL_ANNULUS: &str = "strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)";
pub const COMMUTATOR: &str = "strands: 3\na(1,2)^-1 a(1,3)^-1 a(1,2) a(1,3)";

pub fn word(text: &str) -> BandWord {
    parse_band_word(text).unwrap()
}

fn letter(strands: usize) -> impl Strategy<Value = BandLetter> {
    (1..=strands, 1..strands, any::<bool>()).prop_map(move |(a, b, neg)| {
        let b = if b >= a { b + 1 } else { b };
        let sign = if neg { Sign::Negative } else { Sign::Positive };
        BandLetter::new(a.min(b), a.max(b), sign).unwrap()
    })
}

/// Any word on 1..=max_strands strands with up to max_letters letters.
pub fn band_word(max_strands: usize, max_letters: usize) -> impl Strategy<Value = BandWord> {
    (1..=max_strands).prop_flat_map(move |n| {
        let letters = if n == 1 {
            Just(Vec::new()).boxed()
        } else {
            prop::collection::vec(letter(n), 0..=max_letters).boxed()
        };
        letters.prop_map(move |ls| BandWord::new(n, ls).unwrap())
    })
}

pub fn connected_word(max_strands: usize, max_letters: usize) -> impl Strategy<Value = BandWord> {
    band_word(max_strands, max_letters)
        .prop_filter("connected surface", |w| seifert_graph(w).components() == 1)
}

/// Words using only adjacent bands a(i,i+1), i.e. plain Artin words.
pub fn adjacent_word(max_strands: usize, max_letters: usize) -> impl Strategy<Value = BandWord> {
    (2..=max_strands)
        .prop_flat_map(move |n| {
            prop::collection::vec((1..n, any::<bool>()), 0..=max_letters).prop_map(move |ls| {
                let letters = ls
                    .into_iter()
                    .map(|(i, neg)| {
                        let sign = if neg { Sign::Negative } else { Sign::Positive };
                        BandLetter::new(i, i + 1, sign).unwrap()
                    })
                    .collect();
                BandWord::new(n, letters).unwrap()
            })
        })
        .prop_filter("connected surface", |w| seifert_graph(w).components() == 1)
}
