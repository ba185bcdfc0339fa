//! Built-in example groups with their expected results.

use serde::Serialize;

use crate::group::{check_toral_induced_finite_order, citation, topological_entropy};
use crate::input::{parse_input, InputDocument};
use crate::torus::Verdict;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Expected {
    pub entropy: f64,
    /// Zero decided without a float comparison.
    pub exact_zero: bool,
    pub bowen_bound: Option<f64>,
    pub li_yorke: Verdict,
    /// Tags that must appear in the Li-Yorke report.
    pub citations: Vec<String>,
    pub toral_finite_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub document: InputDocument,
    pub expected: Expected,
    /// Where the expected values come from.
    pub oracle: &'static str,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryOutcome {
    pub name: String,
    pub passed: bool,
    pub entropy: Option<f64>,
    pub expected_entropy: f64,
    pub verdict: Option<Verdict>,
    pub failures: Vec<String>,
}

struct Spec {
    name: &'static str,
    json: &'static str,
    entropy: f64,
    exact_zero: bool,
    bowen_bound: Option<f64>,
    li_yorke: Verdict,
    citations: &'static [&'static str],
    toral_finite_order: Option<u64>,
    oracle: &'static str,
}

const LN2: f64 = std::f64::consts::LN_2;

fn specs() -> Vec<Spec> {
    let cat = ((3.0 + 5f64.sqrt()) / 2.0).ln();
    vec![
        Spec {
            name: "torus2-squaring",
            json: r#"{
  "name": "torus2-squaring",
  "algebra": { "dim": 2, "basis": ["e1", "e2"], "brackets": [] },
  "lattice": [["1", "0"], ["0", "1"]],
  "endomorphism": [["2", "0"], ["0", "2"]]
}"#,
            entropy: 2.0 * LN2,
            exact_zero: false,
            bowen_bound: Some(2.0 * LN2),
            li_yorke: Verdict::LiYorkeAllPowers,
            citations: &[citation::MAIN_THEOREM, citation::TORUS_LI_YORKE],
            toral_finite_order: None,
            oracle: "squaring on T²: eigenvalues 2, 2",
        },
        Spec {
            name: "plane-doubling",
            json: r#"{
  "name": "plane-doubling",
  "algebra": { "dim": 2, "basis": ["e1", "e2"], "brackets": [] },
  "lattice": [],
  "endomorphism": [["2", "0"], ["0", "2"]]
}"#,
            entropy: 0.0,
            exact_zero: true,
            bowen_bound: Some(2.0 * LN2),
            li_yorke: Verdict::SomePowerLiYorkeFree,
            citations: &[citation::TRIVIAL_TORUS_NO_LI_YORKE],
            toral_finite_order: Some(1),
            oracle: "doubling on ℝ²: trivial central torus",
        },
        Spec {
            name: "cstar-squaring",
            json: r#"{
  "name": "cstar-squaring",
  "algebra": { "dim": 2, "basis": ["r", "theta"], "brackets": [] },
  "lattice": [["0", "1"]],
  "endomorphism": [["2", "0"], ["0", "2"]]
}"#,
            entropy: LN2,
            exact_zero: false,
            bowen_bound: Some(2.0 * LN2),
            li_yorke: Verdict::LiYorkeAllPowers,
            citations: &[citation::MAIN_THEOREM, citation::TORUS_LI_YORKE],
            toral_finite_order: None,
            oracle: "z ↦ z² on ℂ* ≅ ℝ × S¹: the circle factor doubles",
        },
        Spec {
            name: "euclidean-e2",
            json: r#"{
  "name": "euclidean-e2",
  "algebra": { "dim": 3, "basis": ["H", "X", "Y"], "brackets": [[0, 1, 2, "1"], [0, 2, 1, "-1"]] },
  "lattice": [["1", "0", "0"]],
  "endomorphism": [["1", "0", "0"], ["0", "3", "-1"], ["0", "1", "3"]]
}"#,
            entropy: 0.0,
            exact_zero: true,
            bowen_bound: Some(10f64.ln()),
            li_yorke: Verdict::SomePowerLiYorkeFree,
            citations: &[citation::TRIVIAL_TORUS_NO_LI_YORKE],
            toral_finite_order: Some(1),
            oracle: "E(2) has trivial center; H ↦ H, translations ↦ 3I + J",
        },
        Spec {
            name: "euclidean-e2-reflection",
            json: r#"{
  "name": "euclidean-e2-reflection",
  "algebra": { "dim": 3, "basis": ["H", "X", "Y"], "brackets": [[0, 1, 2, "1"], [0, 2, 1, "-1"]] },
  "lattice": [["1", "0", "0"]],
  "endomorphism": [["-1", "0", "0"], ["0", "1", "2"], ["0", "2", "-1"]]
}"#,
            entropy: 0.0,
            exact_zero: true,
            bowen_bound: Some(0.5 * 5f64.ln() * 2.0),
            li_yorke: Verdict::SomePowerLiYorkeFree,
            citations: &[citation::TRIVIAL_TORUS_NO_LI_YORKE],
            toral_finite_order: Some(2),
            oracle: "H ↦ −H with a reflection-similitude on translations; quotient action −1",
        },
        Spec {
            name: "heisenberg-central-circle",
            json: r#"{
  "name": "heisenberg-central-circle",
  "algebra": { "dim": 3, "basis": ["X", "Y", "Z"], "brackets": [[0, 1, 2, "1"]] },
  "lattice": [["0", "0", "1"]],
  "endomorphism": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "2"]]
}"#,
            entropy: LN2,
            exact_zero: false,
            bowen_bound: Some(2.0 * LN2),
            li_yorke: Verdict::LiYorkeAllPowers,
            citations: &[citation::MAIN_THEOREM, citation::TORUS_LI_YORKE],
            toral_finite_order: None,
            oracle: "torus action on Z is [2], forced by [X, Y] = Z",
        },
        Spec {
            name: "cat-map",
            json: r#"{
  "name": "cat-map",
  "algebra": { "dim": 2, "basis": ["e1", "e2"], "brackets": [] },
  "lattice": [["1", "0"], ["0", "1"]],
  "endomorphism": [["2", "1"], ["1", "1"]]
}"#,
            entropy: cat,
            exact_zero: false,
            bowen_bound: Some(cat),
            li_yorke: Verdict::LiYorkeAllPowers,
            citations: &[citation::MAIN_THEOREM, citation::TORUS_LI_YORKE],
            toral_finite_order: None,
            oracle: "roots of t² − 3t + 1",
        },
        Spec {
            name: "shear",
            json: r#"{
  "name": "shear",
  "algebra": { "dim": 2, "basis": ["e1", "e2"], "brackets": [] },
  "lattice": [["1", "0"], ["0", "1"]],
  "endomorphism": [["1", "1"], ["0", "1"]]
}"#,
            entropy: 0.0,
            exact_zero: true,
            bowen_bound: Some(0.0),
            li_yorke: Verdict::SomePowerLiYorkeFree,
            citations: &[citation::MAIN_THEOREM, citation::TORUS_LI_YORKE, citation::GROUP_LI_YORKE],
            toral_finite_order: None,
            oracle: "both eigenvalues equal 1",
        },
        Spec {
            name: "sl2-radical-demo",
            json: r#"{
  "name": "sl2-radical-demo",
  "algebra": {
    "dim": 4,
    "basis": ["H", "E", "F", "C"],
    "brackets": [[0, 1, 1, "2"], [0, 2, 2, "-2"], [1, 2, 0, "1"]]
  },
  "lattice": [["0", "0", "0", "1"]],
  "endomorphism": [["1", "0", "0", "0"], ["0", "2", "0", "0"], ["0", "0", "1/2", "0"], ["0", "0", "0", "2"]]
}"#,
            entropy: LN2,
            exact_zero: false,
            bowen_bound: Some(2.0 * LN2),
            li_yorke: Verdict::LiYorkeAllPowers,
            citations: &[citation::MAIN_THEOREM, citation::TORUS_LI_YORKE],
            toral_finite_order: None,
            oracle: "sl₂ ⊕ ℚ with the circle on the center; Ad(diag(√2, 1/√2)) on sl₂, doubling on C",
        },
    ]
}

pub fn builtin_catalog() -> Vec<CatalogEntry> {
    specs()
        .into_iter()
        .map(|s| CatalogEntry {
            name: s.name,
            document: parse_input(s.json).expect("catalog documents parse"),
            expected: Expected {
                entropy: s.entropy,
                exact_zero: s.exact_zero,
                bowen_bound: s.bowen_bound,
                li_yorke: s.li_yorke,
                citations: s.citations.iter().map(|c| c.to_string()).collect(),
                toral_finite_order: s.toral_finite_order,
            },
            oracle: s.oracle,
        })
        .collect()
}

pub fn find_entry(name: &str) -> Option<CatalogEntry> {
    builtin_catalog().into_iter().find(|e| e.name == name)
}

/// Runs the pipeline on an entry and compares against its expected record.
pub fn run_entry(entry: &CatalogEntry) -> EntryOutcome {
    let mut failures = Vec::new();
    let mut entropy = None;
    let mut verdict = None;
    if let Err(e) = check_entry(entry, &mut failures, &mut entropy, &mut verdict) {
        failures.push(format!("pipeline error: {e}"));
    }
    EntryOutcome {
        name: entry.name.into(),
        passed: failures.is_empty(),
        entropy,
        expected_entropy: entry.expected.entropy,
        verdict,
        failures,
    }
}

fn check_entry(
    entry: &CatalogEntry,
    failures: &mut Vec<String>,
    entropy: &mut Option<f64>,
    verdict: &mut Option<Verdict>,
) -> Result<()> {
    let doc = &entry.document;
    let tol = doc.options.tol;
    let exp = &entry.expected;
    let g = doc.group()?;
    let e = doc.endomorphism(&g)?;
    let report = topological_entropy(&g, &e, tol)?;
    *entropy = Some(report.entropy.value);
    if exp.exact_zero {
        if !report.entropy.exact_zero {
            failures.push("entropy not decided exactly zero".into());
        }
    } else if (report.entropy.value - exp.entropy).abs() > tol {
        failures.push(format!("entropy {} differs from {}", report.entropy.value, exp.entropy));
    }
    if let Some(b) = exp.bowen_bound {
        if (report.bowen_bound.value - b).abs() > tol {
            failures.push(format!("Bowen bound {} differs from {b}", report.bowen_bound.value));
        }
    }
    match &report.li_yorke {
        None => failures.push("no Li-Yorke report".into()),
        Some(ly) => {
            *verdict = Some(ly.verdict);
            if ly.verdict != exp.li_yorke {
                failures.push(format!("verdict {} differs from {}", ly.verdict.as_str(), exp.li_yorke.as_str()));
            }
            for c in &exp.citations {
                if &ly.citation != c && !ly.chain.iter().any(|l| &l.citation == c) {
                    failures.push(format!("citation {c} missing"));
                }
            }
        }
    }
    if let Some(order) = exp.toral_finite_order {
        match check_toral_induced_finite_order(&g, &e) {
            Ok(c) if c.order == order => {}
            Ok(c) => failures.push(format!("toral order {} differs from {order}", c.order)),
            Err(err) => failures.push(format!("finite-order check failed: {err}")),
        }
    }
    Ok(())
}

pub fn run_all() -> Vec<EntryOutcome> {
    builtin_catalog().iter().map(run_entry).collect()
}
