use courant_core::axioms::{check_implications, classify, run_check, run_check_explicit, Classification};
use courant_core::{AxiomReport, GenericSectionFamily, Status};
use rayon::prelude::*;

use crate::error::CliError;
use crate::scenario::{CheckRequest, Scenario};

pub const ENGINE_VERSION: &str = concat!("courant ", env!("CARGO_PKG_VERSION"));

/// Everything computed for one scenario.
#[derive(Debug, Clone)]
pub struct Report {
    pub scenario_digest: String,
    pub engine_version: &'static str,
    pub dimension: usize,
    pub degree: u32,
    pub sections: usize,
    pub seed: u64,
    pub classification: Option<Classification>,
    /// Requested checks on generic data, in request order.
    pub checks: Vec<AxiomReport>,
    /// Requested checks on the explicit sections and functions, if any.
    pub explicit: Vec<AxiomReport>,
    pub implication_violations: Vec<String>,
}

impl Report {
    /// 1 if any requested check fails, 2 if none fails but some were
    /// skipped, 0 otherwise. Classification alone always succeeds.
    pub fn exit_code(&self) -> i32 {
        let all = || self.checks.iter().chain(&self.explicit);
        if all().any(|r| r.status == Status::Fail) {
            1
        } else if all().any(|r| r.status == Status::Skipped) {
            2
        } else {
            0
        }
    }
}

pub fn run(scenario: &Scenario) -> Result<Report, CliError> {
    let r = &scenario.realization;
    let family = GenericSectionFamily::new(scenario.degree, scenario.sections, scenario.seed);
    let flux = scenario.flux.as_ref();
    let engine = |check: String| move |source| CliError::Engine { check: check.clone(), source };

    let classification = if scenario.checks.contains(&CheckRequest::Classify) {
        Some(classify(r, &family, flux).map_err(engine("classify".into()))?)
    } else {
        None
    };
    let ids: Vec<_> = scenario
        .checks
        .iter()
        .filter_map(|c| match c {
            CheckRequest::Check(id) => Some(*id),
            CheckRequest::Classify => None,
        })
        .collect();
    let checks = ids
        .par_iter()
        .map(|&id| run_check(r, id, &family, flux).map_err(engine(id.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let explicit = match &scenario.explicit {
        None => Vec::new(),
        Some(data) => ids
            .par_iter()
            .map(|&id| run_check_explicit(r, id, data, flux).map_err(engine(format!("{id} (explicit data)"))))
            .collect::<Result<Vec<_>, _>>()?,
    };

    let mut all: Vec<AxiomReport> = checks.clone();
    if let Some(c) = &classification {
        all.extend(c.reports.iter().filter(|r| !ids.contains(&r.id)).cloned());
    }
    let implication_violations = check_implications(&all, r.admissibility().is_unrestricted(r.dim()));

    Ok(Report {
        scenario_digest: scenario.digest.clone(),
        engine_version: ENGINE_VERSION,
        dimension: scenario.dimension,
        degree: scenario.degree,
        sections: scenario.sections,
        seed: scenario.seed,
        classification,
        checks,
        explicit,
        implication_violations,
    })
}
