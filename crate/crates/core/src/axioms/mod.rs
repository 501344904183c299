//! Mechanical checks of the Courant-type axioms on generic admissible data.

mod checks;
mod family;
mod jacobiator;
mod report;

pub use checks::{
    check_anchor_antisymmetry, check_axiom, check_bianchi, check_derivation_condition, check_implications,
    check_poisson, check_quadratic, check_strong_constraint, check_twist_c2, check_twist_v2, classify,
    coordinate_vars, determinant, run_check, run_check_explicit, Classification, StrongLevel,
};
pub use family::{generic_sections, ExplicitData, GenericSectionFamily};
pub use jacobiator::{compute_j1_j2, decomposition_residual, jacobiator, jacobiator_and_t, t_scalar};
pub use report::{AxiomReport, CheckId, ClassificationLabel, Status};
