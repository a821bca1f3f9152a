use serde::Serialize;

use crate::band_words::{ArtinLetter, ArtinWord, BandWord};
use crate::error::{Error, Result};

/// Pairwise linking numbers of the closure components; row `p-1` is component `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LinkingMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn components(&self) -> usize {
        self.entries.len()
    }

    /// Linking number of components `p` and `q` (1-based labels).
    pub fn get(&self, p: usize, q: usize) -> i64 {
        self.entries[p - 1][q - 1]
    }

    pub fn negated(&self) -> LinkingMatrix {
        LinkingMatrix {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|v| -v).collect())
                .collect(),
        }
    }
}

/// Half the signed crossing count between each pair of components of the
/// closure, read off the Artin expansion.
pub fn linking_matrix(word: &BandWord) -> LinkingMatrix {
    let summary = word.closure_summary();
    let m = summary.components;
    let artin = word.artin_expand();
    let mut occupant: Vec<usize> = (0..=artin.strands()).collect();
    let mut twice = vec![vec![0i64; m]; m];
    for l in artin.letters() {
        let g = l.generator;
        let p = summary.component_of(occupant[g]) - 1;
        let q = summary.component_of(occupant[g + 1]) - 1;
        if p != q {
            twice[p][q] += l.sign.as_i64();
            twice[q][p] += l.sign.as_i64();
        }
        occupant.swap(g, g + 1);
    }
    let entries = twice
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    debug_assert!(v % 2 == 0, "inter-component crossings come in pairs");
                    v / 2
                })
                .collect()
        })
        .collect();
    LinkingMatrix { entries }
}

/// Artin word on the strands of one closure component, obtained by deleting
/// every other strand together with the crossings that touch it.
pub fn extract_component(word: &BandWord, component: usize) -> Result<ArtinWord> {
    let summary = word.closure_summary();
    if component == 0 || component > summary.components {
        return Err(Error::UnknownComponent(component));
    }
    let keep: Vec<bool> = summary
        .strand_partition
        .iter()
        .enumerate()
        .map(|(s, &c)| s > 0 && c == component)
        .collect();
    let kept = keep.iter().filter(|&&k| k).count();

    let artin = word.artin_expand();
    let mut occupant: Vec<usize> = (0..=artin.strands()).collect();
    let mut letters = Vec::new();
    for l in artin.letters() {
        let g = l.generator;
        if keep[occupant[g]] && keep[occupant[g + 1]] {
            let rank = (1..=g).filter(|&p| keep[occupant[p]]).count();
            letters.push(ArtinLetter::new(rank, l.sign));
        }
        occupant.swap(g, g + 1);
    }
    ArtinWord::new(kept, letters)
}
