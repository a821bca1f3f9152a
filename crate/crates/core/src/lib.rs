#![allow(clippy::needless_range_loop)]

pub mod annulus;
pub mod band_words;
pub mod corpus;
pub mod error;
pub mod fence;
pub mod invariants;
pub mod laurent;
pub mod registry;
pub mod transform;
