//! The doubled bundle `E + E*`: pairings, anchor, `D`, the C-bracket, flux
//! twists and the induced Poisson bracket.

mod admissibility;
mod flux;
mod realization;
mod section;

pub use admissibility::Admissibility;
pub use flux::FluxTensor;
pub use realization::{DoubledRealization, PairingSign};
pub use section::DoubledSection;
