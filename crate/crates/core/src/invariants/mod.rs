//! Exact invariants of the braid closure and of the canonical surface.

mod burau;
mod determinant;
mod linking;
mod signature;

pub use burau::{alexander_from_burau, burau_reduced, identity, PolyMatrix};
pub use determinant::{determinant, seifert_pencil};
pub use linking::{extract_component, linking_matrix, LinkingMatrix};
pub use signature::signature;

use crate::band_words::BandWord;
use crate::error::Result;
use crate::fence::{cycle_basis, seifert_matrix, SeifertMatrix};
use crate::laurent::LaurentPoly;
use crate::registry::{Registry, Strategy};

/// `det(V − t·Vᵀ)`, normalized; zero when the determinant vanishes.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> LaurentPoly {
    determinant(&seifert_pencil(&v.entries)).normalized_or_zero()
}

/// A way of computing the one-variable Alexander polynomial of a closure.
pub trait AlexanderRoute: Strategy {
    fn alexander(&self, word: &BandWord) -> Result<LaurentPoly>;
}

/// Determinant of the Seifert pencil of the canonical surface.
pub struct SeifertRoute;

impl Strategy for SeifertRoute {
    fn name(&self) -> &'static str {
        "seifert"
    }

    fn summary(&self) -> &'static str {
        "det(V - tV^T) on the canonical surface (needs a connected surface)"
    }
}

impl AlexanderRoute for SeifertRoute {
    fn alexander(&self, word: &BandWord) -> Result<LaurentPoly> {
        let basis = cycle_basis(word)?;
        Ok(alexander_from_seifert(&seifert_matrix(word, &basis)?))
    }
}

/// Reduced Burau image of the Artin expansion.
pub struct BurauRoute;

impl Strategy for BurauRoute {
    fn name(&self) -> &'static str {
        "burau"
    }

    fn summary(&self) -> &'static str {
        "det(I - B)(1 - t)/(1 - t^n) from the reduced Burau representation"
    }
}

impl AlexanderRoute for BurauRoute {
    fn alexander(&self, word: &BandWord) -> Result<LaurentPoly> {
        alexander_from_burau(&word.artin_expand())
    }
}

pub fn alexander_routes() -> Registry<dyn AlexanderRoute> {
    let mut r: Registry<dyn AlexanderRoute> = Registry::new();
    r.register(Box::new(SeifertRoute))
        .register(Box::new(BurauRoute));
    r
}

/// Alexander polynomial of one closure component, via the Burau route.
pub fn component_alexander(word: &BandWord, component: usize) -> Result<LaurentPoly> {
    alexander_from_burau(&extract_component(word, component)?)
}
