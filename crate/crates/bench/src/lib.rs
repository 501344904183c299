//! Shared setup for the engine benchmarks.

use courant_core::axioms::generic_sections;
use courant_core::{Admissibility, DoubledRealization, DoubledSection, GenericSectionFamily};

/// Flat realization of rank `dim` with no constraint on test data.
pub fn flat(dim: usize) -> DoubledRealization {
    DoubledRealization::flat(dim, Admissibility::unrestricted(dim))
}

/// Three generic sections of the given coefficient degree.
pub fn sections(r: &DoubledRealization, degree: u32) -> Vec<DoubledSection> {
    generic_sections(&GenericSectionFamily::new(degree, 3, 0), r).expect("generic sections")
}
