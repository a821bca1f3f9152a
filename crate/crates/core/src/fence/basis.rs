use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{require_connected, DisjointSets};
use crate::band_words::BandWord;
use crate::error::{Error, Result};

/// One pass of a curve through a band. `forward` means lower strand → upper strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandTraversal {
    /// 1-based letter position.
    pub letter: usize,
    pub forward: bool,
}

impl BandTraversal {
    pub fn reversed(self) -> Self {
        BandTraversal {
            forward: !self.forward,
            ..self
        }
    }

    /// (start strand, end strand) of the traversal in `word`.
    pub fn endpoints(&self, word: &BandWord) -> Option<(usize, usize)> {
        let l = word.letter(self.letter)?;
        Some(if self.forward {
            (l.lower(), l.upper())
        } else {
            (l.upper(), l.lower())
        })
    }
}

/// Stretch of a curve along a disk between two band attachments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiskTraversal {
    pub strand: usize,
    /// Letter whose band the curve arrives from.
    pub from_height: usize,
    /// Letter whose band the curve leaves through.
    pub to_height: usize,
    pub upward: bool,
}

/// A closed curve on the canonical surface, recorded as its band passes.
/// Consecutive traversals (cyclically) share a strand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    pub traversals: Vec<BandTraversal>,
}

impl Cycle {
    pub fn new(traversals: Vec<BandTraversal>) -> Self {
        Cycle { traversals }
    }

    pub fn len(&self) -> usize {
        self.traversals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traversals.is_empty()
    }

    pub fn check_closed(&self, word: &BandWord) -> Result<()> {
        if self.traversals.is_empty() {
            return Err(Error::PreconditionViolated("empty cycle".into()));
        }
        let ends = self
            .traversals
            .iter()
            .map(|t| {
                t.endpoints(word).ok_or_else(|| {
                    Error::PreconditionViolated(format!(
                        "cycle uses letter {} of a {}-letter word",
                        t.letter,
                        word.len()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        for k in 0..ends.len() {
            let next = ends[(k + 1) % ends.len()];
            if ends[k].1 != next.0 {
                return Err(Error::PreconditionViolated(format!(
                    "cycle is not closed: traversal {} ends on strand {} but the next starts on strand {}",
                    k + 1,
                    ends[k].1,
                    next.0
                )));
            }
        }
        Ok(())
    }

    pub fn disk_traversals(&self, word: &BandWord) -> Vec<DiskTraversal> {
        let n = self.traversals.len();
        (0..n)
            .filter_map(|k| {
                let here = self.traversals[k];
                let next = self.traversals[(k + 1) % n];
                let (_, strand) = here.endpoints(word)?;
                Some(DiskTraversal {
                    strand,
                    from_height: here.letter,
                    to_height: next.letter,
                    upward: next.letter > here.letter,
                })
            })
            .collect()
    }

    /// Compact text form such as `+3 -1 +2` (sign = traversal direction).
    pub fn describe(&self) -> String {
        self.traversals
            .iter()
            .map(|t| format!("{}{}", if t.forward { '+' } else { '-' }, t.letter))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Fundamental cycles of the first-seen spanning forest of the Seifert graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleBasis {
    pub cycles: Vec<Cycle>,
    /// Chord letter (1-based) generating each cycle.
    pub chords: Vec<usize>,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

/// Letters are scanned in word order; a letter joining two unlinked strands is
/// a tree edge, every other letter is a chord. Each chord runs lower → upper
/// and closes through the tree path from upper back to lower.
pub fn cycle_basis(word: &BandWord) -> Result<CycleBasis> {
    require_connected(word)?;
    let n = word.strands();
    let mut sets = DisjointSets::new(n + 1);
    // tree adjacency: strand -> (neighbour, letter)
    let mut tree: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n + 1];
    let mut chords = Vec::new();
    for (k, l) in word.letters().iter().enumerate() {
        if sets.union(l.lower(), l.upper()) {
            tree[l.lower()].push((l.upper(), k + 1));
            tree[l.upper()].push((l.lower(), k + 1));
        } else {
            chords.push(k + 1);
        }
    }

    let cycles = chords
        .iter()
        .map(|&chord| {
            let l = word.letter(chord).unwrap();
            let mut traversals = vec![BandTraversal {
                letter: chord,
                forward: true,
            }];
            traversals.extend(tree_path(&tree, word, l.upper(), l.lower()));
            Cycle::new(traversals)
        })
        .collect();
    Ok(CycleBasis { cycles, chords })
}

/// Band traversals along the unique tree path `from → to`.
fn tree_path(
    tree: &[Vec<(usize, usize)>],
    word: &BandWord,
    from: usize,
    to: usize,
) -> Vec<BandTraversal> {
    let mut via: Vec<Option<(usize, usize)>> = vec![None; tree.len()];
    let mut seen = vec![false; tree.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(u, letter) in &tree[v] {
            if !seen[u] {
                seen[u] = true;
                via[u] = Some((v, letter));
                queue.push_back(u);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (prev, letter) = via[v].expect("tree spans a connected surface");
        let l = word.letter(letter).unwrap();
        path.push(BandTraversal {
            letter,
            forward: l.lower() == prev,
        });
        v = prev;
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band_words::parse_band_word;

    fn word(text: &str) -> BandWord {
        parse_band_word(text).unwrap()
    }

    fn tr(letter: usize, forward: bool) -> BandTraversal {
        BandTraversal { letter, forward }
    }

    #[test]
    fn trefoil_basis() {
        let w = word("strands: 2\na(1,2) a(1,2) a(1,2)");
        let b = cycle_basis(&w).unwrap();
        assert_eq!(b.chords, vec![2, 3]);
        assert_eq!(b.cycles[0].traversals, vec![tr(2, true), tr(1, false)]);
        assert_eq!(b.cycles[1].traversals, vec![tr(3, true), tr(1, false)]);
        for c in &b.cycles {
            c.check_closed(&w).unwrap();
        }
    }

    #[test]
    fn annulus_basis_is_one_circuit() {
        let w = word("strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)");
        let b = cycle_basis(&w).unwrap();
        assert_eq!(b.len(), 1);
        let c = &b.cycles[0];
        assert_eq!(c.len(), 6);
        c.check_closed(&w).unwrap();
        let mut strands: Vec<_> = c.disk_traversals(&w).iter().map(|d| d.strand).collect();
        strands.sort();
        assert_eq!(strands, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn disc_and_disconnected() {
        assert!(cycle_basis(&word("strands: 2\na(1,2)")).unwrap().is_empty());
        assert_eq!(
            cycle_basis(&word("strands: 3\na(1,2)")),
            Err(Error::DisconnectedSurface { components: 2 })
        );
    }

    #[test]
    fn open_cycles_are_rejected() {
        let w = word("strands: 3\na(1,2) a(2,3)");
        assert!(Cycle::new(vec![tr(1, true), tr(2, true)])
            .check_closed(&w)
            .is_err());
        assert!(Cycle::new(vec![tr(4, true)]).check_closed(&w).is_err());
    }
}
