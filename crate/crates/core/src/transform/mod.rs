//! Replacement of negative bands by cut-open zero-framed annuli.

mod checks;

pub use checks::{
    preservation_checks, AccountingCheck, AlexanderCheck, CheckOutcome, LinkingCheck,
    PreservationCheck, SeifertFormCheck, SignatureCheck, SqpCheck, TransformRun,
};

use std::collections::{BTreeMap, VecDeque};

use serde::{Serialize, Serializer};

use crate::annulus::{cut_annulus, markov_reduce, AnnulusEntry};
use crate::band_words::{BandLetter, BandWord};
use crate::error::{Error, Result};
use crate::fence::{cycle_basis, require_connected, BandTraversal, Cycle, CycleBasis};

/// One band of the replacement path, as an offset into the inserted block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockTraversal {
    pub offset: usize,
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReplacementStep {
    /// 1-based position of the replaced negative letter.
    pub replaced_position: usize,
    pub p: usize,
    pub q: usize,
    pub annulus: String,
    pub n_a: usize,
    /// Strands that move (`x ↦ x + n_a` for `x > p`).
    pub strand_remap: BTreeMap<usize, usize>,
    #[serde(serialize_with = "letters_as_text")]
    pub inserted_block: Vec<BandLetter>,
    /// Path from `p` to `q + n_a` through the block.
    pub block_path: Vec<BlockTraversal>,
}

fn letters_as_text<S: Serializer>(
    letters: &[BandLetter],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let text = letters
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    s.serialize_str(&text)
}

impl ReplacementStep {
    fn remap_strand(&self, x: usize) -> usize {
        if x > self.p {
            x + self.n_a
        } else {
            x
        }
    }

    /// Applies the step to the word it was computed on.
    fn apply(&self, word: &BandWord) -> Result<BandWord> {
        word.letter(self.replaced_position)
            .filter(|l| !l.is_positive() && (l.lower(), l.upper()) == (self.p, self.q))
            .ok_or_else(|| {
                Error::CertificateMismatch(format!(
                    "letter {} is not a({},{})^-1",
                    self.replaced_position, self.p, self.q
                ))
            })?;
        let mut letters = Vec::with_capacity(word.len() + self.n_a);
        for (k, l) in word.letters().iter().enumerate() {
            if k + 1 == self.replaced_position {
                letters.extend_from_slice(&self.inserted_block);
            } else {
                letters.push(l.remapped(|x| self.remap_strand(x)));
            }
        }
        BandWord::new(word.strands() + self.n_a, letters)
    }

    fn map_position(&self, position: usize) -> usize {
        if position > self.replaced_position {
            position + self.n_a
        } else {
            position
        }
    }

    fn map_cycle(&self, cycle: &Cycle) -> Cycle {
        let mut traversals = Vec::new();
        for t in &cycle.traversals {
            if t.letter == self.replaced_position {
                let path = self.block_path.iter().map(|b| BandTraversal {
                    letter: self.replaced_position + b.offset,
                    forward: b.forward,
                });
                if t.forward {
                    traversals.extend(path);
                } else {
                    traversals.extend(path.rev().map(BandTraversal::reversed));
                }
            } else {
                traversals.push(BandTraversal {
                    letter: self.map_position(t.letter),
                    forward: t.forward,
                });
            }
        }
        Cycle::new(traversals)
    }
}

/// Unique path from `from` to `to` in the (tree) Seifert graph of `block`.
fn block_path(block: &[BandLetter], from: usize, to: usize) -> Option<Vec<BlockTraversal>> {
    let mut via: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    via.insert(from, (from, usize::MAX));
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for (k, l) in block.iter().enumerate() {
            if let Some(u) = l.opposite(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = via.entry(u) {
                    e.insert((v, k));
                    queue.push_back(u);
                }
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let &(prev, k) = via.get(&v)?;
        path.push(BlockTraversal {
            offset: k,
            forward: block[k].lower() == prev,
        });
        v = prev;
    }
    path.reverse();
    Some(path)
}

/// Replaces the negative letter at `position` (1-based) by the cut-open
/// annulus shifted onto strands `p..=p+n_a`, followed by the closing band
/// `a(p+1, q+n_a)`. Strands above `p` move up by `n_a`.
pub fn replace_one(
    word: &BandWord,
    position: usize,
    annulus: &AnnulusEntry,
) -> Result<(BandWord, ReplacementStep)> {
    let g = word
        .letter(position)
        .filter(|l| !l.is_positive())
        .ok_or(Error::NotNegative { position })?;
    let (p, q) = (g.lower(), g.upper());
    let invalid = |e: Error| Error::InvalidAnnulus(format!("{}: {e}", annulus.name()));
    let reduced = markov_reduce(annulus.word()).map_err(invalid)?;
    let cut = cut_annulus(&reduced).map_err(invalid)?;
    let n_a = reduced.strands();

    let mut inserted_block: Vec<BandLetter> = cut
        .letters()
        .iter()
        .map(|l| l.remapped(|x| x + p - 1))
        .collect();
    inserted_block.push(BandLetter::positive(p + 1, q + n_a)?);
    let block_path = block_path(&inserted_block, p, q + n_a)
        .ok_or_else(|| invalid(Error::PreconditionViolated("cut word is not a disc".into())))?;

    let step = ReplacementStep {
        replaced_position: position,
        p,
        q,
        annulus: annulus.name().to_string(),
        n_a,
        strand_remap: (p + 1..=word.strands()).map(|x| (x, x + n_a)).collect(),
        inserted_block,
        block_path,
    };
    let out = step.apply(word)?;
    Ok((out, step))
}

/// Where one input basis cycle ends up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisImage {
    pub chord: usize,
    pub input: String,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransformCertificate {
    pub input: BandWord,
    pub output: BandWord,
    /// Execution order: last negative letter first.
    pub steps: Vec<ReplacementStep>,
    /// Companion names in execution order.
    pub companions: Vec<String>,
    pub basis_map: Vec<BasisImage>,
}

impl TransformCertificate {
    /// Output strand carrying each input strand (index 0 unused).
    pub fn strand_map(&self) -> Vec<usize> {
        let mut map: Vec<usize> = (0..=self.input.strands()).collect();
        for x in map.iter_mut().skip(1) {
            *x = self.steps.iter().fold(*x, |y, step| step.remap_strand(y));
        }
        map
    }
}

/// Replaces every negative letter, last one first. `companions` is either a
/// single default annulus or one annulus per negative letter in word order.
pub fn rudolph_transform(
    word: &BandWord,
    companions: &[AnnulusEntry],
) -> Result<(BandWord, TransformCertificate)> {
    require_connected(word)?;
    let negatives = word.negative_positions();
    let t = negatives.len();
    if companions.len() != 1 && companions.len() != t {
        return Err(Error::CompanionArity {
            expected: t,
            got: companions.len(),
        });
    }

    let mut current = word.clone();
    let mut steps = Vec::with_capacity(t);
    for (site, &position) in negatives.iter().enumerate().rev() {
        let annulus = if companions.len() == 1 {
            &companions[0]
        } else {
            &companions[site]
        };
        // earlier negatives sit below `position` and keep their indices
        let (next, step) = replace_one(&current, position, annulus)?;
        current = next;
        steps.push(step);
    }

    let mut cert = TransformCertificate {
        input: word.clone(),
        output: current.clone(),
        companions: steps.iter().map(|s| s.annulus.clone()).collect(),
        steps,
        basis_map: Vec::new(),
    };
    let basis = cycle_basis(word)?;
    let mapped = map_basis(&cert, &basis)?;
    cert.basis_map = basis
        .chords
        .iter()
        .zip(basis.cycles.iter().zip(&mapped.cycles))
        .map(|(&chord, (a, b))| BasisImage {
            chord,
            input: a.describe(),
            output: b.describe(),
        })
        .collect();
    Ok((current, cert))
}

/// Carries a basis of the input surface to the output surface: surviving
/// bands keep their role and each replaced band is rerouted along the
/// block path. The steps are replayed and checked against `cert.output`.
pub fn map_basis(cert: &TransformCertificate, basis: &CycleBasis) -> Result<CycleBasis> {
    for (k, c) in basis.cycles.iter().enumerate() {
        c.check_closed(&cert.input)
            .map_err(|e| Error::CertificateMismatch(format!("input cycle {}: {e}", k + 1)))?;
    }
    let mut word = cert.input.clone();
    let mut cycles = basis.cycles.clone();
    let mut chords = basis.chords.clone();
    for step in &cert.steps {
        let next = step.apply(&word)?;
        cycles = cycles.iter().map(|c| step.map_cycle(c)).collect();
        chords = chords.iter().map(|&c| step.map_position(c)).collect();
        word = next;
    }
    if word != cert.output {
        return Err(Error::CertificateMismatch(
            "replayed steps do not reproduce the output word".into(),
        ));
    }
    for (k, c) in cycles.iter().enumerate() {
        c.check_closed(&word)
            .map_err(|e| Error::CertificateMismatch(format!("output cycle {}: {e}", k + 1)))?;
    }
    Ok(CycleBasis { cycles, chords })
}

/// Companions in order of the negative letters they replaced.
pub fn satellite_trace(cert: &TransformCertificate) -> Vec<String> {
    cert.companions.iter().rev().cloned().collect()
}
