use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::generic::Witness;

/// Identifier of an individual check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    V1,
    V2,
    Derivation,
    StrongFn,
    StrongVec,
    StrongForm,
    AnchorAntisym,
    TwistV2,
    TwistC2,
    Bianchi,
    QuadraticJacobi,
    QuadraticBilinear,
    QuadraticAdInvariance,
    PoissonAntisym,
    PoissonJacobi,
}

impl CheckId {
    pub const ALL: [CheckId; 20] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::V1,
        CheckId::V2,
        CheckId::Derivation,
        CheckId::StrongFn,
        CheckId::StrongVec,
        CheckId::StrongForm,
        CheckId::AnchorAntisym,
        CheckId::TwistV2,
        CheckId::TwistC2,
        CheckId::Bianchi,
        CheckId::QuadraticJacobi,
        CheckId::QuadraticBilinear,
        CheckId::QuadraticAdInvariance,
        CheckId::PoissonAntisym,
        CheckId::PoissonJacobi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::C1 => "C1",
            CheckId::C2 => "C2",
            CheckId::C3 => "C3",
            CheckId::C4 => "C4",
            CheckId::C5 => "C5",
            CheckId::V1 => "V1",
            CheckId::V2 => "V2",
            CheckId::Derivation => "derivation",
            CheckId::StrongFn => "strong-fn",
            CheckId::StrongVec => "strong-vec",
            CheckId::StrongForm => "strong-form",
            CheckId::AnchorAntisym => "anchor-antisym",
            CheckId::TwistV2 => "twist-V2",
            CheckId::TwistC2 => "twist-C2",
            CheckId::Bianchi => "bianchi",
            CheckId::QuadraticJacobi => "quadratic-jacobi",
            CheckId::QuadraticBilinear => "quadratic-bilinear",
            CheckId::QuadraticAdInvariance => "quadratic-ad-invariance",
            CheckId::PoissonAntisym => "poisson-antisym",
            CheckId::PoissonJacobi => "poisson-jacobi",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        CheckId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Outcome of one check.
///
/// `degree` is the coefficient degree of the generic data that decided the
/// outcome: the full bound for PASS, the first failing degree for FAIL.
/// `residual_terms` counts the terms of the generic residual at that degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub id: CheckId,
    pub status: Status,
    pub degree: Option<u32>,
    pub witness: Option<Witness>,
    pub residual_terms: usize,
    pub note: Option<String>,
}

impl AxiomReport {
    pub fn pass(id: CheckId, degree: Option<u32>) -> AxiomReport {
        AxiomReport { id, status: Status::Pass, degree, witness: None, residual_terms: 0, note: None }
    }

    pub fn fail(id: CheckId, degree: Option<u32>, witness: Witness, residual_terms: usize) -> AxiomReport {
        AxiomReport { id, status: Status::Fail, degree, witness: Some(witness), residual_terms, note: None }
    }

    pub fn skipped(id: CheckId, note: impl Into<String>) -> AxiomReport {
        AxiomReport { id, status: Status::Skipped, degree: None, witness: None, residual_terms: 0, note: Some(note.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> AxiomReport {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(old) => format!("{old}; {note}"),
            None => note,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<24} {}", self.id.as_str(), self.status)?;
        if let Some(k) = self.degree {
            write!(f, " (degree {k})")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n    witness: {w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, "\n    note: {n}")?;
        }
        Ok(())
    }
}

/// Position in the family of C-bracket algebroids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassificationLabel {
    Courant,
    PreCourant,
    AnteCourant,
    Vaisman,
    JacobiVaisman,
    JacobiAnteCourant,
    NotVaisman,
}

impl ClassificationLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassificationLabel::Courant => "Courant",
            ClassificationLabel::PreCourant => "pre-Courant",
            ClassificationLabel::AnteCourant => "ante-Courant",
            ClassificationLabel::Vaisman => "Vaisman",
            ClassificationLabel::JacobiVaisman => "Jacobi-Vaisman",
            ClassificationLabel::JacobiAnteCourant => "Jacobi-ante-Courant",
            ClassificationLabel::NotVaisman => "not-Vaisman",
        }
    }

    /// Largest family member consistent with the statuses of C1..C5.
    pub fn from_axioms(c1: bool, c2: bool, c3: bool, c4: bool, c5: bool) -> ClassificationLabel {
        if !(c3 && c5) {
            return ClassificationLabel::NotVaisman;
        }
        match (c1, c2, c4) {
            (true, true, true) => ClassificationLabel::Courant,
            (_, true, true) => ClassificationLabel::PreCourant,
            (true, _, true) => ClassificationLabel::JacobiAnteCourant,
            (false, _, true) => ClassificationLabel::AnteCourant,
            (true, _, false) => ClassificationLabel::JacobiVaisman,
            (false, _, false) => ClassificationLabel::Vaisman,
        }
    }
}

impl fmt::Display for ClassificationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
