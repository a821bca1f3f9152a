use serde::Serialize;

use super::basis::{cycle_basis, CycleBasis};
use super::lanes::{tally, LaneAllocator, Polyline};
use super::{require_connected, surface_stats};
use crate::band_words::BandWord;
use crate::error::{Error, Result};

/// `entries[a][b] = lk(c_a⁺, c_b)` over `basis`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    pub entries: Vec<Vec<i64>>,
    #[serde(serialize_with = "serialize_chords")]
    pub basis: CycleBasis,
}

fn serialize_chords<S: serde::Serializer>(
    basis: &CycleBasis,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    basis.chords.serialize(serializer)
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Vec<Vec<i64>> {
        transpose(&self.entries)
    }
}

pub(crate) fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|a| (0..n).map(|b| m[b][a]).collect()).collect()
}

fn realize_pair(word: &BandWord, basis: &CycleBasis, a: usize, b: usize) -> (Polyline, Polyline) {
    let mut alloc = LaneAllocator::default();
    let pa = Polyline::realize(word, &basis.cycles[a], &mut alloc);
    let pb = Polyline::realize(word, &basis.cycles[b], &mut alloc);
    (pa, pb)
}

fn check_basis(word: &BandWord, basis: &CycleBasis) -> Result<()> {
    require_connected(word)?;
    for c in &basis.cycles {
        c.check_closed(word)?;
    }
    Ok(())
}

/// Seifert pairing of the canonical surface of `word` on `basis`.
///
/// Each pair of curves is drawn in fresh lanes (the diagonal uses two
/// independent copies of the same cycle) and the crossings where the
/// push-off of the first curve passes over the second are summed.
pub fn seifert_matrix(word: &BandWord, basis: &CycleBasis) -> Result<SeifertMatrix> {
    check_basis(word, basis)?;
    let n = basis.len();
    let mut entries = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (pa, pb) = realize_pair(word, basis, a, b);
            entries[a][b] = tally(&pa, &pb).pushoff_over;
        }
    }
    Ok(SeifertMatrix {
        entries,
        basis: basis.clone(),
    })
}

/// Algebraic intersection numbers of the basis curves on the surface.
pub fn intersection_form(word: &BandWord, basis: &CycleBasis) -> Result<Vec<Vec<i64>>> {
    check_basis(word, basis)?;
    let n = basis.len();
    let mut form = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (pa, pb) = realize_pair(word, basis, a, b);
            form[a][b] = tally(&pa, &pb).on_surface;
        }
    }
    Ok(form)
}

/// Self-linking of the core of an annulus with its push-off.
pub fn framing(word: &BandWord) -> Result<i64> {
    let stats = surface_stats(word);
    if !stats.is_connected() || stats.b1 != 1 {
        return Err(Error::NotAnAnnulus {
            reason: format!(
                "b1 = {}, {} surface component(s)",
                stats.b1, stats.surface_components
            ),
        });
    }
    let basis = cycle_basis(word)?;
    Ok(seifert_matrix(word, &basis)?.entries[0][0])
}
