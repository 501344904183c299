use std::path::{Path, PathBuf};
use std::process::Command;

use courant_cli::{emit, load_scenario, machine, parse_scenario, run, text, CheckRequest, CliError, Format};
use courant_core::{CheckId, ClassificationLabel, Status};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn fixture(name: &str) -> PathBuf {
    fixtures().join(format!("{name}.json"))
}

fn all_fixtures() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(fixtures())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    out.sort();
    out
}

fn report_for(name: &str) -> courant_cli::Report {
    run(&load_scenario(&fixture(name)).unwrap()).unwrap()
}

fn field_error(json: &str) -> String {
    match parse_scenario(json) {
        Err(e @ CliError::Field { .. }) => e.to_string(),
        Err(e) => panic!("expected a field error, got {e}"),
        Ok(_) => panic!("scenario should not load"),
    }
}

#[test]
fn minimal_scenario_defaults() {
    let s = parse_scenario(r#"{"dimension": 2}"#).unwrap();
    assert_eq!((s.degree, s.sections, s.seed), (2, 3, 0));
    assert_eq!(s.checks, vec![CheckRequest::Classify]);
    assert!(s.flux.is_none() && s.explicit.is_none());
    assert!(s.digest.starts_with("sha256:") && s.digest.len() == 7 + 64);
}

#[test]
fn digest_ignores_key_order_and_whitespace() {
    let a = parse_scenario(r#"{"dimension": 1, "degree": 1}"#).unwrap();
    let b = parse_scenario("{\"degree\":1,\n  \"dimension\":1}").unwrap();
    let c = parse_scenario(r#"{"dimension": 1, "degree": 2}"#).unwrap();
    assert_eq!(a.digest, b.digest);
    assert_ne!(a.digest, c.digest);
}

#[test]
fn bad_inputs_name_the_field() {
    let e = field_error(r#"{"dimension": 1, "algebroid_E": {"anchor": [["x0"], ["0"]], "C": []}}"#);
    assert!(e.contains("algebroid_E.anchor[0][0]"), "{e}");

    let e = field_error(r#"{"dimension": 0}"#);
    assert!(e.contains("dimension"), "{e}");

    let e = field_error(r#"{"dimension": 1, "checks": ["C9"]}"#);
    assert!(e.contains("checks"), "{e}");

    let e = field_error(r#"{"dimension": 1, "flux": [[1, 1, 3, "1"]]}"#);
    assert!(e.contains("flux"), "{e}");

    let e = field_error(r#"{"dimension": 1, "admissibility": "y-only"}"#);
    assert!(e.contains("admissibility"), "{e}");

    assert!(matches!(parse_scenario(r#"{"dimension": 1,"#), Err(CliError::Json { .. })));
    assert!(matches!(parse_scenario(r#"{"dimension": 1, "colour": 3}"#), Err(CliError::Json { .. })));
}

#[test]
fn non_algebroid_is_rejected_at_load() {
    // rho(a1) = x1 d_1 with a nonzero structure constant breaks the anchor homomorphism.
    let e = field_error(
        r#"{"dimension": 2,
            "algebroid_E": {"anchor": [["x1","0"],["0","1"],["0","0"],["0","0"]], "C": [[1,2,1,"1"]]}}"#,
    );
    assert!(e.contains("homomorphism"), "{e}");
}

#[test]
fn flux_with_repeated_indices_loads() {
    let s = parse_scenario(r#"{"dimension": 1, "flux": [[1, 1, 1, "1"]], "checks": ["twist-V2"]}"#).unwrap();
    assert!(s.flux.is_some());
    let r = run(&s).unwrap();
    assert_eq!(r.checks[0].status, Status::Fail);
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn flat_unrestricted_is_vaisman() {
    let r = report_for("flat_d1_unrestricted");
    let c = r.classification.as_ref().unwrap();
    assert_eq!(c.label, ClassificationLabel::Vaisman);
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn flat_x_only_is_courant() {
    let r = report_for("flat_d2_x_only");
    assert_eq!(r.classification.as_ref().unwrap().label, ClassificationLabel::Courant);
    assert!(r.checks.iter().all(|c| c.passed()));
    assert!(r.implication_violations.is_empty());
}

#[test]
fn strong_function_failure_has_the_minimal_witness() {
    let r = report_for("flat_d2_strong_fn");
    let fn_check = r.checks.iter().find(|c| c.id == CheckId::StrongFn).unwrap();
    assert_eq!(fn_check.status, Status::Fail);
    assert_eq!(fn_check.degree, Some(1));
    let w = fn_check.witness.as_ref().unwrap();
    let inputs: Vec<(String, String)> = w.inputs.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
    assert_eq!(inputs, vec![("f".into(), "x1".into()), ("g".into(), "xt1".into())]);
    assert_eq!(w.residual.to_string(), "1");
}

#[test]
fn every_failure_carries_a_witness() {
    for path in all_fixtures() {
        let r = run(&load_scenario(&path).unwrap()).unwrap();
        let classified = r.classification.iter().flat_map(|c| c.reports.iter());
        for rep in r.checks.iter().chain(&r.explicit).chain(classified) {
            match rep.status {
                Status::Fail => {
                    let w = rep.witness.as_ref().unwrap_or_else(|| panic!("{}: {} has no witness", path.display(), rep.id));
                    assert!(!w.residual.is_zero());
                    assert!(rep.residual_terms > 0);
                }
                Status::Skipped => assert!(rep.note.is_some()),
                Status::Pass => assert!(rep.witness.is_none()),
            }
        }
    }
}

#[test]
fn no_fixture_violates_an_implication() {
    let paths = all_fixtures();
    assert!(paths.len() >= 10);
    for path in paths {
        let r = run(&load_scenario(&path).unwrap()).unwrap();
        assert!(r.implication_violations.is_empty(), "{}: {:?}", path.display(), r.implication_violations);
    }
}

#[test]
fn machine_output_is_deterministic() {
    let s = load_scenario(&fixture("ante_courant_d2")).unwrap();
    let a = machine(&run(&s).unwrap());
    let b = machine(&run(&s).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["engine_version"], courant_cli::ENGINE_VERSION);
    assert_eq!(v["classification"]["label"], "ante-Courant");
    assert_eq!(v["exit_code"], 1);
}

#[test]
fn machine_failure_entries_have_residuals() {
    let out = machine(&report_for("h_flux_open_d4"));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let bianchi = checks.iter().find(|c| c["id"] == "bianchi").unwrap();
    assert_eq!(bianchi["status"], "FAIL");
    assert!(bianchi["witness"]["residual"].is_string());
    assert!(bianchi["witness"]["component"].as_str().unwrap().starts_with("dH"));
}

#[test]
fn text_output_names_the_class() {
    let out = text(&report_for("pre_courant_d2"));
    assert!(out.contains("classification: pre-Courant"), "{out}");
    assert_eq!(emit(&report_for("pre_courant_d2"), Format::Text), out);
}

#[test]
fn golden_reports() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("COURANT_BLESS").is_some();
    for path in all_fixtures() {
        let name = path.file_stem().unwrap().to_string_lossy().into_owned();
        let out = machine(&run(&load_scenario(&path).unwrap()).unwrap());
        let target = golden.join(format!("{name}.json"));
        if bless {
            std::fs::write(&target, &out).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&target)
            .unwrap_or_else(|_| panic!("missing golden file {}; rerun with COURANT_BLESS=1", target.display()));
        assert_eq!(out, expected, "{name} differs from its golden report");
    }
}

fn courant(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_courant")).args(args).output().unwrap()
}

fn fixture_arg(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn binary_exit_codes() {
    let code = |args: &[&str]| courant(args).status.code().unwrap();
    assert_eq!(code(&["run", &fixture_arg("flat_d2_x_only")]), 0);
    assert_eq!(code(&["run", &fixture_arg("flat_d2_strong_fn")]), 1);
    assert_eq!(code(&["run", &fixture_arg("beta_so3_d3")]), 2);
    assert_eq!(code(&["run", "/nonexistent/scenario.json"]), 3);
    assert_eq!(code(&["run", &fixture_arg("flat_d2_x_only"), "--format", "yaml"]), 3);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn binary_overrides_and_out_file() {
    let out_path = std::env::temp_dir().join(format!("courant-test-{}.json", std::process::id()));
    let out_arg = out_path.to_string_lossy().into_owned();
    let o = courant(&[
        "run",
        &fixture_arg("flat_d1_unrestricted"),
        "--format",
        "machine",
        "--degree",
        "1",
        "--sections",
        "4",
        "--seed",
        "7",
        "--out",
        &out_arg,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    std::fs::remove_file(&out_path).ok();
    assert_eq!((v["degree"].as_u64(), v["sections"].as_u64(), v["seed"].as_u64()), (Some(1), Some(4), Some(7)));
    assert_eq!(v["classification"]["label"], "Vaisman");
}

#[test]
fn seed_does_not_change_verdicts() {
    let mut s = load_scenario(&fixture("ante_courant_d2")).unwrap();
    let base = run(&s).unwrap();
    s.seed = 41;
    let other = run(&s).unwrap();
    let statuses = |r: &courant_cli::Report| r.checks.iter().map(|c| (c.id, c.status, c.degree)).collect::<Vec<_>>();
    assert_eq!(statuses(&base), statuses(&other));
    assert_eq!(base.classification.unwrap().label, other.classification.unwrap().label);
}
