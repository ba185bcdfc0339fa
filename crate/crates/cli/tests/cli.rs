use std::path::PathBuf;

use serde_json::Value;

use lie_entropy_cli::{run_with, EXIT_ABORT, EXIT_INVALID, EXIT_OK};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("lie-entropy").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_input(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lie-entropy-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn catalog_lists_entries() {
    let (code, out, _) = run(&["catalog"]);
    assert_eq!(code, EXIT_OK);
    let list: Value = serde_json::from_str(&out).unwrap();
    assert!(list.as_array().unwrap().iter().any(|e| e["name"] == "cat-map"));
}

#[test]
fn catalog_document_feeds_back_in() {
    let (code, doc, _) = run(&["catalog", "--catalog", "heisenberg-central-circle"]);
    assert_eq!(code, EXIT_OK);
    let path = write_input("heisenberg", &doc);
    let (code, out, _) = run(&["entropy", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert!((report["entropy"]["value"].as_f64().unwrap() - 2f64.ln()).abs() < 1e-9);
    assert_eq!(report["input"]["name"], "heisenberg-central-circle");
}

#[test]
fn validate_reports_presentation_issues() {
    let (code, out, _) = run(&["validate", "--catalog", "euclidean-e2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["valid"], true);

    // X in the Heisenberg algebra is not semisimple.
    let path = write_input(
        "bad-lattice",
        r#"{"algebra": {"dim": 3, "brackets": [[0, 1, 2, "1"]]}, "lattice": [["1", "0", "0"]],
            "endomorphism": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}"#,
    );
    let (code, out, _) = run(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["valid"], false);
    assert!(!report["presentation_issues"].as_array().unwrap().is_empty());
    let (code, _, err) = run(&["entropy", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.starts_with("error:"));
}

#[test]
fn non_homomorphism_is_invalid() {
    let path = write_input(
        "not-hom",
        r#"{"algebra": {"dim": 3, "brackets": [[0, 1, 2, "1"]]},
            "endomorphism": [["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}"#,
    );
    let (code, out, _) = run(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["endomorphism"]["status"], "invalid");
}

#[test]
fn malformed_input_is_located() {
    let path = write_input("malformed", "{\"algebra\": {\"dim\": 2},\n \"lattice\": [[\"1\", \"2\"]");
    let (code, _, err) = run(&["entropy", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn source_is_required() {
    assert_eq!(run(&["entropy"]).0, EXIT_INVALID);
    assert_eq!(run(&["entropy", "--catalog", "no-such-entry"]).0, EXIT_INVALID);
    assert_eq!(run(&["frobnicate"]).0, EXIT_INVALID);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn unreachable_tolerance_aborts_the_pipeline() {
    let (code, _, err) = run(&["entropy", "--catalog", "cat-map", "--tol", "1e-300"]);
    assert_eq!(code, EXIT_ABORT, "{err}");
    assert!(err.contains("entropy"), "{err}");
}

#[test]
fn analyze_includes_the_finite_order_check() {
    let (code, out, _) = run(&["analyze", "--catalog", "euclidean-e2-reflection"]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["toral_finite_order"]["order"], 2);
    assert!(report.get("estimate").is_none());
}

#[test]
fn analyze_runs_the_estimator_on_request() {
    let (_, doc, _) = run(&["catalog", "--catalog", "cstar-squaring"]);
    let doc = doc.replace("\"standard\"", "\"with-estimate\"");
    let path = write_input("with-estimate", &doc);
    let (code, out, _) = run(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let report: Value = serde_json::from_str(&out).unwrap();
    let slope = report["estimate"]["estimate"]["slope"].as_f64().unwrap();
    assert!((slope - 2f64.ln()).abs() < 0.15 * 2f64.ln(), "{slope}");
}

#[test]
fn estimate_writes_csv() {
    let (code, out, _) = run(&["estimate", "--catalog", "cstar-squaring", "--n-max", "6", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,spanning_count,separated_count");
    assert_eq!(lines.len(), 7);
}

#[test]
fn estimate_needs_a_torus() {
    let (code, _, err) = run(&["estimate", "--catalog", "plane-doubling"]);
    assert_eq!(code, EXIT_ABORT);
    assert!(err.contains("dimension 0"), "{err}");
}

#[test]
fn run_all_passes() {
    let (code, out, _) = run(&["catalog", "--run-all", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().skip(1).all(|l| l.contains(",PASS,")));
}
