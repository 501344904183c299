use crate::algebroid::Side;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch { what: String, expected: usize, found: usize },
    #[error("side mismatch: expected a field on {expected}, found {found}")]
    SideMismatch { expected: Side, found: Side },
    #[error("{op} does not support degree {degree}")]
    UnsupportedDegree { op: &'static str, degree: usize },
    #[error("index {index} out of range in {what}")]
    IndexOutOfRange { what: String, index: usize },
    #[error("invalid structure functions: {0}")]
    StructureFunctions(String),
    #[error("{side} is not a Lie algebroid: {identity} fails ({detail})")]
    NotLieAlgebroid { side: Side, identity: &'static str, detail: String },
    #[error("K^2 != 1 at entry ({row}, {col})")]
    NotParaComplex { row: usize, col: usize },
    #[error("parameter budget of {limit} exhausted")]
    ParamBudget { limit: usize },
    #[error("invalid admissibility: {0}")]
    Admissibility(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}
