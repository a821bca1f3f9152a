//! Zero-framed strongly quasipositive annulus words: validation, Markov
//! reduction to valence-2 form, the cut-open disc word, and a catalog.

mod catalog;

pub use catalog::{Catalog, CatalogDocument, BUILTIN_TREFOIL};

use rand::Rng;
use serde::Serialize;

use crate::band_words::{BandLetter, BandWord};
use crate::error::{Error, Result};
use crate::fence::{framing, surface_stats};
use crate::invariants::component_alexander;
use crate::laurent::LaurentPoly;

/// A validated zero-framed annulus word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnulusEntry {
    name: String,
    word: BandWord,
    declared_core: String,
    provenance: String,
}

impl AnnulusEntry {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn word(&self) -> &BandWord {
        &self.word
    }

    pub fn declared_core(&self) -> &str {
        &self.declared_core
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn reduced(&self) -> ReducedAnnulus {
        markov_reduce(&self.word).expect("validated entries reduce")
    }

    /// Alexander polynomial of the annulus core (closure component 1).
    /// Only a witness for `declared_core`: it cannot tell the unknot apart
    /// from knots with trivial polynomial.
    pub fn core_alexander(&self) -> LaurentPoly {
        component_alexander(&self.word, 1).expect("an annulus closure has two components")
    }
}

fn check_annulus_shape(word: &BandWord) -> Result<()> {
    let stats = surface_stats(word);
    if !stats.is_connected() {
        return Err(Error::NotAnAnnulus {
            reason: format!("surface has {} components", stats.surface_components),
        });
    }
    if stats.b1 != 1 {
        return Err(Error::NotAnAnnulus {
            reason: format!("b1 = {}", stats.b1),
        });
    }
    Ok(())
}

pub fn validate_annulus(
    word: &BandWord,
    name: impl Into<String>,
    declared_core: impl Into<String>,
) -> Result<AnnulusEntry> {
    if !word.is_strongly_quasipositive() {
        return Err(Error::NotSqp {
            positions: word.negative_positions(),
        });
    }
    check_annulus_shape(word)?;
    let f = framing(word)?;
    if f != 0 {
        return Err(Error::NonZeroFraming { framing: f });
    }
    Ok(AnnulusEntry {
        name: name.into(),
        word: word.clone(),
        declared_core: declared_core.into(),
        provenance: String::new(),
    })
}

/// Annulus word in which every strand meets exactly two bands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducedAnnulus {
    word: BandWord,
}

impl ReducedAnnulus {
    pub fn word(&self) -> &BandWord {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }
}

/// Deletes valence-1 strands (smallest index first) together with their
/// band until every strand has valence 2.
pub fn markov_reduce(word: &BandWord) -> Result<ReducedAnnulus> {
    if word.strands() > 1 {
        if let Some(strand) = word.valences().iter().skip(1).position(|&v| v == 0) {
            return Err(Error::IsolatedStrand { strand: strand + 1 });
        }
    }
    check_annulus_shape(word)?;

    let mut current = word.clone();
    while let Some(k) = current.valences().iter().skip(1).position(|&v| v == 1) {
        current = destabilize(&current, k + 1);
    }
    debug_assert!(current.valences().iter().skip(1).all(|&v| v == 2));
    Ok(ReducedAnnulus { word: current })
}

fn destabilize(word: &BandWord, strand: usize) -> BandWord {
    let letters = word
        .letters()
        .iter()
        .filter(|l| !l.touches(strand))
        .map(|l| l.remapped(|x| if x > strand { x - 1 } else { x }))
        .collect();
    BandWord::new(word.strands() - 1, letters).expect("renumbered letters stay in range")
}

/// Inserts a new strand at `strand` (shifting later strands up) joined by
/// one positive band to `partner`, placed at letter position `position`
/// (1-based). `partner` is an index of the input word.
pub fn stabilize(
    word: &BandWord,
    strand: usize,
    partner: usize,
    position: usize,
) -> Result<BandWord> {
    let n = word.strands();
    if strand == 0
        || strand > n + 1
        || partner == 0
        || partner > n
        || position == 0
        || position > word.len() + 1
    {
        return Err(Error::PreconditionViolated(format!(
            "cannot stabilize {n}-strand word at strand {strand}, partner {partner}, position {position}"
        )));
    }
    let shift = |x: usize| if x >= strand { x + 1 } else { x };
    let partner = shift(partner);
    let mut letters: Vec<BandLetter> = word.letters().iter().map(|l| l.remapped(shift)).collect();
    letters.insert(
        position - 1,
        BandLetter::positive(strand.min(partner), strand.max(partner))?,
    );
    BandWord::new(n + 1, letters)
}

pub fn random_stabilization(rng: &mut impl Rng, word: &BandWord) -> BandWord {
    let n = word.strands();
    stabilize(
        word,
        rng.gen_range(1..=n + 1),
        rng.gen_range(1..=n),
        rng.gen_range(1..=word.len() + 1),
    )
    .expect("arguments drawn in range")
}

/// Cuts the annulus open along strand 1: the first `a(1,j)` becomes
/// `a(2,j+1)`, the other `a(1,j')` becomes `a(1,j'+1)`, everything else
/// moves up one strand.
pub fn cut_annulus(reduced: &ReducedAnnulus) -> Result<BandWord> {
    let word = &reduced.word;
    let on_first: Vec<usize> = word
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.lower() == 1)
        .map(|(k, _)| k)
        .collect();
    if on_first.len() != 2 {
        return Err(Error::PreconditionViolated(format!(
            "expected exactly two bands on strand 1, found {}",
            on_first.len()
        )));
    }
    let letters = word
        .letters()
        .iter()
        .enumerate()
        .map(|(k, l)| {
            if k == on_first[0] {
                BandLetter::new(2, l.upper() + 1, l.sign())
            } else if k == on_first[1] {
                BandLetter::new(1, l.upper() + 1, l.sign())
            } else {
                Ok(l.remapped(|x| x + 1))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    BandWord::new(word.strands() + 1, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band_words::parse_band_word;
    use crate::fence::surface_stats;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn word(text: &str) -> BandWord {
        parse_band_word(text).unwrap()
    }

    const TREFOIL_ANNULUS: &str = "strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)";

    #[test]
    fn validation_order() {
        let e = validate_annulus(&word(TREFOIL_ANNULUS), "trefoil_T23", "T(2,3)").unwrap();
        assert_eq!(e.name(), "trefoil_T23");
        assert_eq!(e.core_alexander(), LaurentPoly::from_coeffs(0, &[1, -1, 1]));

        let hopf = word("strands: 2\na(1,2) a(1,2)");
        assert_eq!(
            validate_annulus(&hopf, "h", "unknot"),
            Err(Error::NonZeroFraming { framing: -1 })
        );
        assert!(matches!(
            validate_annulus(&word("strands: 2\na(1,2)"), "d", "unknot"),
            Err(Error::NotAnAnnulus { .. })
        ));
        assert!(matches!(
            validate_annulus(&hopf.sign_reversed(), "h", "unknot"),
            Err(Error::NotSqp { .. })
        ));
    }

    #[test]
    fn reduction_undoes_stabilizations() {
        let annulus = word(TREFOIL_ANNULUS);
        assert_eq!(markov_reduce(&annulus).unwrap().word(), &annulus);

        let once = word("strands: 7\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3) a(6,7)");
        assert_eq!(markov_reduce(&once).unwrap().word(), &annulus);
        let twice = word("strands: 8\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3) a(6,7) a(7,8)");
        assert_eq!(markov_reduce(&twice).unwrap().word(), &annulus);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut w = annulus.clone();
        for _ in 0..5 {
            w = random_stabilization(&mut rng, &w);
        }
        assert_eq!(w.strands(), 11);
        assert_eq!(markov_reduce(&w).unwrap().word(), &annulus);
    }

    #[test]
    fn reduction_errors() {
        assert_eq!(
            markov_reduce(&word("strands: 3\na(1,2) a(1,2)")),
            Err(Error::IsolatedStrand { strand: 3 })
        );
        assert!(matches!(
            markov_reduce(&word("strands: 2\na(1,2) a(1,2) a(1,2)")),
            Err(Error::NotAnAnnulus { .. })
        ));
    }

    #[test]
    fn trefoil_annulus_cut() {
        let w_a = word("strands: 6\na(1,4) a(2,5) a(4,6) a(3,5) a(1,3) a(2,6)");
        let cut = cut_annulus(&markov_reduce(&w_a).unwrap()).unwrap();
        assert_eq!(
            cut.render(),
            "strands: 7\na(2,5) a(3,6) a(5,7) a(4,6) a(1,4) a(3,7)"
        );
        let stats = surface_stats(&cut);
        assert!(stats.is_connected());
        assert_eq!(stats.b1, 0);
        assert!(cut.is_strongly_quasipositive());
    }

    #[test]
    fn cut_needs_two_bands_on_first_strand() {
        let r = ReducedAnnulus {
            word: word("strands: 3\na(2,3) a(2,3)"),
        };
        assert!(matches!(
            cut_annulus(&r),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn stabilize_bounds() {
        let w = word("strands: 2\na(1,2)");
        assert_eq!(
            stabilize(&w, 1, 2, 2).unwrap().render(),
            "strands: 3\na(2,3) a(1,3)"
        );
        assert!(stabilize(&w, 4, 1, 1).is_err());
        assert!(stabilize(&w, 1, 3, 1).is_err());
    }
}
