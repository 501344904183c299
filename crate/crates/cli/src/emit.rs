use std::collections::BTreeMap;
use std::fmt::Write;

use courant_core::{AxiomReport, Witness};
use serde_json::{json, Value};

use crate::run::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

fn object(entries: impl IntoIterator<Item = (&'static str, Value)>) -> Value {
    // Built from a BTreeMap so keys come out sorted whatever map backs Value.
    let sorted: BTreeMap<&str, Value> = entries.into_iter().collect();
    Value::Object(sorted.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn witness_json(w: &Witness) -> Value {
    object([
        ("component", json!(w.component)),
        ("inputs", Value::Array(w.inputs.iter().map(|(k, v)| json!([k, v])).collect())),
        ("point", Value::Array(w.point.iter().map(|(v, x)| json!([v.to_string(), x.to_string()])).collect())),
        ("residual", json!(w.residual.to_string())),
        ("value", json!(w.value.to_string())),
    ])
}

fn report_json(r: &AxiomReport) -> Value {
    object([
        ("degree", json!(r.degree)),
        ("id", json!(r.id.as_str())),
        ("note", json!(r.note)),
        ("residual_terms", json!(r.residual_terms)),
        ("status", json!(r.status.to_string())),
        ("witness", r.witness.as_ref().map_or(Value::Null, witness_json)),
    ])
}

/// Canonical JSON: sorted keys, two-space indentation, rationals as strings.
pub fn machine(report: &Report) -> String {
    let classification = report.classification.as_ref().map_or(Value::Null, |c| {
        object([
            ("axioms", Value::Array(c.reports.iter().map(report_json).collect())),
            ("diagnostic", json!(c.diagnostic)),
            ("label", json!(c.label.as_str())),
        ])
    });
    let v = object([
        ("checks", Value::Array(report.checks.iter().map(report_json).collect())),
        ("classification", classification),
        ("degree", json!(report.degree)),
        ("dimension", json!(report.dimension)),
        ("engine_version", json!(report.engine_version)),
        ("exit_code", json!(report.exit_code())),
        ("explicit", Value::Array(report.explicit.iter().map(report_json).collect())),
        ("implication_violations", json!(report.implication_violations)),
        ("scenario_digest", json!(report.scenario_digest)),
        ("sections", json!(report.sections)),
        ("seed", json!(report.seed)),
    ]);
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn indent(out: &mut String, r: &AxiomReport) {
    for line in r.to_string().lines() {
        let _ = writeln!(out, "  {line}");
    }
}

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario {}", report.scenario_digest);
    let _ = writeln!(out, "engine   {}", report.engine_version);
    let _ = writeln!(
        out,
        "D = {}, degree bound {}, {} generic sections, seed {}",
        report.dimension, report.degree, report.sections, report.seed
    );
    if let Some(c) = &report.classification {
        let _ = writeln!(out, "\nclassification: {}", c.label);
        for r in &c.reports {
            indent(&mut out, r);
        }
        if let Some(d) = &c.diagnostic {
            let _ = writeln!(out, "  diagnostic: {d}");
        }
    }
    if !report.checks.is_empty() {
        let _ = writeln!(out, "\nchecks:");
        for r in &report.checks {
            indent(&mut out, r);
        }
    }
    if !report.explicit.is_empty() {
        let _ = writeln!(out, "\nchecks on explicit data:");
        for r in &report.explicit {
            indent(&mut out, r);
        }
    }
    if report.implication_violations.is_empty() {
        let _ = writeln!(out, "\nimplications: none violated");
    } else {
        let _ = writeln!(out, "\nimplications violated:");
        for v in &report.implication_violations {
            let _ = writeln!(out, "  {v}");
        }
    }
    out
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Text => text(report),
        Format::Machine => machine(report),
    }
}
