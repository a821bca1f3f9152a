//! The canonical ("fence") surface of a band word: one disk per strand, one
//! band per letter, bands stacked by letter order.

mod basis;
mod lanes;
mod seifert;

pub use basis::{cycle_basis, BandTraversal, Cycle, CycleBasis, DiskTraversal};
pub use seifert::{framing, intersection_form, seifert_matrix, SeifertMatrix};

use serde::Serialize;

use crate::band_words::{BandWord, Sign};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertEdge {
    /// 1-based letter position; doubles as the band height.
    pub height: usize,
    pub lower: usize,
    pub upper: usize,
    pub sign: Sign,
}

/// Multigraph with a vertex per strand and an edge per letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertGraph {
    pub vertices: usize,
    pub edges: Vec<SeifertEdge>,
}

impl SeifertGraph {
    pub fn valence(&self, strand: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.lower == strand || e.upper == strand)
            .count()
    }

    /// Number of connected components, isolated vertices included.
    pub fn components(&self) -> usize {
        let mut sets = DisjointSets::new(self.vertices + 1);
        let mut count = self.vertices;
        for e in &self.edges {
            if sets.union(e.lower, e.upper) {
                count -= 1;
            }
        }
        count
    }
}

pub fn seifert_graph(word: &BandWord) -> SeifertGraph {
    SeifertGraph {
        vertices: word.strands(),
        edges: word
            .letters()
            .iter()
            .enumerate()
            .map(|(k, l)| SeifertEdge {
                height: k + 1,
                lower: l.lower(),
                upper: l.upper(),
                sign: l.sign(),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceStats {
    pub b1: usize,
    pub surface_components: usize,
    pub euler: i64,
    pub boundary_components: usize,
    pub genus_if_connected: Option<i64>,
}

impl SurfaceStats {
    pub fn is_connected(&self) -> bool {
        self.surface_components == 1
    }
}

pub fn surface_stats(word: &BandWord) -> SurfaceStats {
    let surface_components = seifert_graph(word).components();
    let euler = word.strands() as i64 - word.len() as i64;
    let b1 = word.len() + surface_components - word.strands();
    let boundary_components = word.closure_summary().components;
    let genus_if_connected =
        (surface_components == 1).then(|| (2 - euler - boundary_components as i64) / 2);
    SurfaceStats {
        b1,
        surface_components,
        euler,
        boundary_components,
        genus_if_connected,
    }
}

pub(crate) fn require_connected(word: &BandWord) -> Result<()> {
    let components = seifert_graph(word).components();
    if components == 1 {
        Ok(())
    } else {
        Err(Error::DisconnectedSurface { components })
    }
}

/// Union-find over `0..n` with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
