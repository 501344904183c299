//! Lie algebroids in a global frame over the flat doubled chart.

mod calculus;
mod fields;
mod frame;
mod nijenhuis;
mod validate;

pub use calculus::interior;
pub use fields::{increasing_tuples, FormField, TangentField, VectorField, MAX_FORM_DEGREE};
pub use frame::{FrameAlgebroid, Side};
pub use nijenhuis::ParaComplexStructure;
pub use validate::{validate_lie_algebroid, Validation};
