//! Exact symbolic engine for pairs of Lie algebroids on a flat doubled chart:
//! the C-bracket on `E + E*`, its flux twists, and mechanical checks of the
//! Courant-type axioms with counterexample witnesses.

pub mod algebroid;
pub mod axioms;
pub mod doubled;
pub mod error;
pub mod generic;
pub mod poly;

pub use axioms::{classify, run_check, AxiomReport, CheckId, Classification, ClassificationLabel, GenericSectionFamily, Status};
pub use algebroid::{FormField, FrameAlgebroid, ParaComplexStructure, Side, TangentField, VectorField};
pub use doubled::{Admissibility, DoubledRealization, DoubledSection, FluxTensor, PairingSign};
pub use error::Error;
pub use generic::Witness;
pub use poly::{eta_pairing, parse_expr, DoubledIndex, Monomial, ParseError, Poly, PolyAcc, Rational, Var, VarKind};
