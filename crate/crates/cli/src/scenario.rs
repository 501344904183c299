use std::fmt;
use std::path::Path;

use courant_core::axioms::ExplicitData;
use courant_core::{
    parse_expr, Admissibility, CheckId, DoubledRealization, DoubledSection, FluxTensor, FrameAlgebroid, Poly, Side,
    Var, VectorField,
};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;

/// Largest supported rank. Generic residuals grow quickly with `D`.
pub const MAX_DIMENSION: usize = 8;

/// One entry of the `checks` list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckRequest {
    Classify,
    Check(CheckId),
}

impl fmt::Display for CheckRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckRequest::Classify => f.write_str("classify"),
            CheckRequest::Check(id) => write!(f, "{id}"),
        }
    }
}

/// A validated scenario: every expression parsed, every index in range.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub dimension: usize,
    pub degree: u32,
    pub sections: usize,
    pub seed: u64,
    pub realization: DoubledRealization,
    pub flux: Option<FluxTensor>,
    pub explicit: Option<ExplicitData>,
    pub checks: Vec<CheckRequest>,
    /// `sha256:<hex>` of the scenario JSON with sorted keys and no whitespace.
    pub digest: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawExpr {
    Text(String),
    Int(i64),
}

impl RawExpr {
    fn text(&self) -> String {
        match self {
            RawExpr::Text(s) => s.clone(),
            RawExpr::Int(n) => n.to_string(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawAdmissibility {
    Preset(String),
    Mask { mask: Vec<String> },
    PerClass { functions: Vec<String>, vectors: Vec<String>, forms: Vec<String> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawAlgebroid {
    Preset(String),
    Explicit {
        anchor: Vec<Vec<RawExpr>>,
        #[serde(rename = "C", default)]
        c: Vec<(usize, usize, usize, RawExpr)>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSection {
    #[serde(rename = "X")]
    x: Vec<RawExpr>,
    xi: Vec<RawExpr>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    dimension: usize,
    #[serde(default)]
    description: Option<String>,
    degree: Option<u32>,
    sections: Option<usize>,
    seed: Option<u64>,
    admissibility: Option<RawAdmissibility>,
    #[serde(rename = "algebroid_E")]
    algebroid_e: Option<RawAlgebroid>,
    #[serde(rename = "algebroid_Estar")]
    algebroid_estar: Option<RawAlgebroid>,
    flux: Option<Vec<(usize, usize, usize, RawExpr)>>,
    explicit_sections: Option<Vec<RawSection>>,
    explicit_functions: Option<Vec<RawExpr>>,
    checks: Option<Vec<String>>,
}

fn field_err(field: impl Into<String>, message: impl fmt::Display) -> CliError {
    CliError::Field { field: field.into(), message: message.to_string() }
}

fn expr(field: impl Fn() -> String, e: &RawExpr, dim: usize) -> Result<Poly, CliError> {
    parse_expr(&e.text(), dim, 0).map_err(|err| field_err(field(), format!("`{}`: {err}", e.text())))
}

fn variable(field: String, name: &str, dim: usize) -> Result<Var, CliError> {
    let p = parse_expr(name, dim, 0).map_err(|err| field_err(field.clone(), format!("`{name}`: {err}")))?;
    match p.vars().into_iter().next() {
        Some(v) if p == Poly::var(v) => Ok(v),
        _ => Err(field_err(field, format!("`{name}` is not a single coordinate"))),
    }
}

fn variables(field: &str, names: &[String], dim: usize) -> Result<Vec<Var>, CliError> {
    names.iter().enumerate().map(|(i, n)| variable(format!("{field}[{i}]"), n, dim)).collect()
}

fn admissibility(raw: Option<&RawAdmissibility>, dim: usize) -> Result<Admissibility, CliError> {
    let field = "admissibility";
    match raw {
        None => Ok(Admissibility::unrestricted(dim)),
        Some(RawAdmissibility::Preset(name)) => match name.as_str() {
            "unrestricted" => Ok(Admissibility::unrestricted(dim)),
            "x-only" => Ok(Admissibility::x_only(dim)),
            "xt-only" => Ok(Admissibility::xt_only(dim)),
            other => Err(field_err(field, format!("unknown preset `{other}`"))),
        },
        Some(RawAdmissibility::Mask { mask }) => {
            Admissibility::mask(variables("admissibility.mask", mask, dim)?).map_err(|e| field_err(field, e))
        }
        Some(RawAdmissibility::PerClass { functions, vectors, forms }) => Admissibility::per_class(
            variables("admissibility.functions", functions, dim)?,
            variables("admissibility.vectors", vectors, dim)?,
            variables("admissibility.forms", forms, dim)?,
        )
        .map_err(|e| field_err(field, e)),
    }
}

fn algebroid(field: &str, raw: Option<&RawAlgebroid>, side: Side, dim: usize) -> Result<FrameAlgebroid, CliError> {
    let alg = match raw {
        None => FrameAlgebroid::coordinate(side, dim),
        Some(RawAlgebroid::Preset(name)) => match name.as_str() {
            "coordinate" => FrameAlgebroid::coordinate(side, dim),
            "trivial" => FrameAlgebroid::trivial(side, dim),
            other => return Err(field_err(field, format!("unknown preset `{other}`"))),
        },
        Some(RawAlgebroid::Explicit { anchor, c }) => {
            if anchor.len() != 2 * dim {
                return Err(field_err(format!("{field}.anchor"), format!("expected {} rows, found {}", 2 * dim, anchor.len())));
            }
            let mut rows = Vec::with_capacity(2 * dim);
            for (m, row) in anchor.iter().enumerate() {
                if row.len() != dim {
                    return Err(field_err(format!("{field}.anchor[{m}]"), format!("expected {dim} entries, found {}", row.len())));
                }
                let parsed = row
                    .iter()
                    .enumerate()
                    .map(|(i, e)| expr(|| format!("{field}.anchor[{m}][{i}]"), e, dim))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(parsed);
            }
            let mut triples = Vec::with_capacity(c.len());
            for (n, (i, j, k, e)) in c.iter().enumerate() {
                let at = || format!("{field}.C[{n}]");
                if [*i, *j, *k].iter().any(|&x| x == 0 || x > dim) {
                    return Err(field_err(at(), format!("indices ({i},{j},{k}) must lie in 1..={dim}")));
                }
                triples.push((i - 1, j - 1, k - 1, expr(at, e, dim)?));
            }
            FrameAlgebroid::new(side, dim, rows, &triples).map_err(|e| field_err(field, e))?
        }
    };
    alg.check_frame().map_err(|e| field_err(field, e))?;
    Ok(alg)
}

fn parse_checks(raw: Option<&[String]>) -> Result<Vec<CheckRequest>, CliError> {
    let names: Vec<String> = match raw {
        None => vec!["classify".into()],
        Some([]) => return Err(field_err("checks", "the list is empty")),
        Some(list) => list.to_vec(),
    };
    let mut out: Vec<CheckRequest> = Vec::new();
    for (i, name) in names.iter().enumerate() {
        let req = if name == "classify" {
            CheckRequest::Classify
        } else {
            CheckRequest::Check(name.parse().map_err(|_| field_err(format!("checks[{i}]"), format!("unknown check `{name}`")))?)
        };
        if !out.contains(&req) {
            out.push(req);
        }
    }
    Ok(out)
}

fn canonical_digest(value: &serde_json::Value) -> String {
    fn canon(v: &serde_json::Value, out: &mut String) {
        match v {
            serde_json::Value::Object(map) => {
                let mut keys: Vec<&String> = map.keys().collect();
                keys.sort();
                out.push('{');
                for (i, k) in keys.into_iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&serde_json::to_string(k).expect("string"));
                    out.push(':');
                    canon(&map[k], out);
                }
                out.push('}');
            }
            serde_json::Value::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    canon(item, out);
                }
                out.push(']');
            }
            other => out.push_str(&other.to_string()),
        }
    }
    let mut s = String::new();
    canon(value, &mut s);
    format!("sha256:{}", hex::encode(Sha256::digest(s.as_bytes())))
}

/// Parses and validates a scenario from JSON text.
pub fn parse_scenario(text: &str) -> Result<Scenario, CliError> {
    let json = |e: serde_json::Error| CliError::Json { line: e.line(), column: e.column(), message: e.to_string() };
    let value: serde_json::Value = serde_json::from_str(text).map_err(json)?;
    let raw: RawScenario = serde_json::from_str(text).map_err(json)?;
    let _ = &raw.description;

    let dim = raw.dimension;
    if dim == 0 || dim > MAX_DIMENSION {
        return Err(field_err("dimension", format!("must lie in 1..={MAX_DIMENSION}, found {dim}")));
    }
    let adm = admissibility(raw.admissibility.as_ref(), dim)?;
    let e = algebroid("algebroid_E", raw.algebroid_e.as_ref(), Side::E, dim)?;
    let estar = algebroid("algebroid_Estar", raw.algebroid_estar.as_ref(), Side::EStar, dim)?;
    let realization = DoubledRealization::new(e, estar, adm).map_err(|e| field_err("algebroid_E", e))?;

    let flux = match &raw.flux {
        None => None,
        Some(entries) => {
            let mut parsed = Vec::with_capacity(entries.len());
            for (n, (m, k, l, e)) in entries.iter().enumerate() {
                let at = || format!("flux[{n}]");
                if [*m, *k, *l].iter().any(|&x| x == 0 || x > 2 * dim) {
                    return Err(field_err(at(), format!("indices ({m},{k},{l}) must lie in 1..={}", 2 * dim)));
                }
                parsed.push((m - 1, k - 1, l - 1, expr(at, e, dim)?));
            }
            Some(FluxTensor::from_entries(dim, &parsed).map_err(|e| field_err("flux", e))?)
        }
    };

    let explicit = if raw.explicit_sections.is_some() || raw.explicit_functions.is_some() {
        let mut data = ExplicitData::default();
        for (n, s) in raw.explicit_sections.iter().flatten().enumerate() {
            let comps = |part: &str, list: &[RawExpr], side: Side| -> Result<VectorField, CliError> {
                if list.len() != dim {
                    return Err(field_err(format!("explicit_sections[{n}].{part}"), format!("expected {dim} entries, found {}", list.len())));
                }
                let ps = list
                    .iter()
                    .enumerate()
                    .map(|(i, e)| expr(|| format!("explicit_sections[{n}].{part}[{i}]"), e, dim))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(VectorField::new(side, ps))
            };
            data.sections.push(DoubledSection::new(comps("X", &s.x, Side::E)?, comps("xi", &s.xi, Side::EStar)?));
        }
        for (n, e) in raw.explicit_functions.iter().flatten().enumerate() {
            data.functions.push(expr(|| format!("explicit_functions[{n}]"), e, dim)?);
        }
        Some(data)
    } else {
        None
    };

    Ok(Scenario {
        dimension: dim,
        degree: raw.degree.unwrap_or(2),
        sections: raw.sections.unwrap_or(3),
        seed: raw.seed.unwrap_or(0),
        realization,
        flux,
        explicit,
        checks: parse_checks(raw.checks.as_deref())?,
        digest: canonical_digest(&value),
    })
}

pub fn load_scenario(path: &Path) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_scenario(&text)
}
