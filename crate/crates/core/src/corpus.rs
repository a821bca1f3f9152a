//! Seeded pseudo-random band words for property runs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::band_words::{BandLetter, BandWord, Sign};
use crate::fence::seifert_graph;

#[derive(Debug, Clone, Copy)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_strands: usize,
    pub max_letters: usize,
    /// Probability that a letter is negative.
    pub negative_rate: f64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 0x5eed,
            count: 200,
            max_strands: 6,
            max_letters: 10,
            negative_rate: 0.5,
        }
    }
}

pub fn random_letter(rng: &mut impl Rng, strands: usize, negative_rate: f64) -> BandLetter {
    let a = rng.gen_range(1..=strands);
    let mut b = rng.gen_range(1..strands);
    if b >= a {
        b += 1;
    }
    let sign = if rng.gen_bool(negative_rate) {
        Sign::Negative
    } else {
        Sign::Positive
    };
    BandLetter::new(a.min(b), a.max(b), sign).expect("distinct strands")
}

/// A word on `2..=max_strands` strands whose canonical surface is connected.
pub fn random_connected_word(rng: &mut impl Rng, spec: &CorpusSpec) -> BandWord {
    loop {
        let strands = rng.gen_range(2..=spec.max_strands.max(2));
        if strands - 1 > spec.max_letters {
            continue;
        }
        let len = rng.gen_range(strands - 1..=spec.max_letters);
        let letters = (0..len)
            .map(|_| random_letter(rng, strands, spec.negative_rate))
            .collect();
        let word = BandWord::new(strands, letters).expect("letters drawn in range");
        if seifert_graph(&word).components() == 1 {
            return word;
        }
    }
}

pub fn generate(spec: &CorpusSpec) -> Vec<BandWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| random_connected_word(&mut rng, spec))
        .collect()
}
