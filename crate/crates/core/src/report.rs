//! JSON emission for analysis reports. Every report embeds the input
//! document it was computed from.

use serde_json::{json, Value};

use crate::group::{
    check_toral_induced_finite_order, topological_entropy, AnalysisReport, FiniteOrderCheck,
    TorusData,
};
use crate::input::InputDocument;
use crate::linalg::{format_rational, EntropyValue, LatticeBasis, MatrixQ, MatrixZ, Rational, SubspaceBasis};
use crate::{Error, Result};

fn vectors(vs: &[Vec<Rational>]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect()))
            .collect(),
    )
}

fn integer_matrix(m: &MatrixZ) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

pub fn rational_matrix_json(m: &MatrixQ) -> Value {
    vectors(&m.to_rows())
}

pub fn subspace_json(s: &SubspaceBasis) -> Value {
    json!({ "dim": s.dim(), "basis": vectors(s.basis()) })
}

pub fn lattice_json(l: &LatticeBasis) -> Value {
    json!({ "rank": l.rank(), "generators": vectors(l.generators()) })
}

pub fn entropy_json(e: &EntropyValue) -> Value {
    let mut v = serde_json::to_value(e).expect("serializable");
    v["certificate_text"] = Value::String(e.certificate.to_string());
    v["positive"] = Value::Bool(e.is_positive());
    v
}

fn torus_json(t: &TorusData) -> Value {
    json!({
        "lattice": lattice_json(&t.lattice),
        "subspace": subspace_json(&t.subspace),
        "action": t.action.as_ref().map(|a| integer_matrix(a.matrix())),
    })
}

pub fn analysis_json(input: &InputDocument, report: &AnalysisReport) -> Value {
    json!({
        "input": input.to_json(),
        "entropy": entropy_json(&report.entropy),
        "bowen_bound": entropy_json(&report.bowen_bound),
        "citation": report.citation,
        "g_phi": subspace_json(&report.g_phi),
        "lattice_phi": lattice_json(&report.lattice_phi),
        "center_phi": subspace_json(&report.center_phi),
        "torus": torus_json(&report.torus),
        "li_yorke": report.li_yorke,
        "stages": report.stages,
        "validations": report.validations,
    })
}

pub fn finite_order_json(check: &Result<FiniteOrderCheck>) -> Value {
    match check {
        Ok(c) => json!({
            "status": "finite",
            "order": c.order,
            "quotient_dim": c.quotient_dim,
            "induced_action": integer_matrix(c.induced.matrix()),
        }),
        Err(e) => json!({ "status": "not_applicable", "reason": e.to_string() }),
    }
}

/// Parses, validates and runs the entropy pipeline on a document.
pub fn analyze_document(doc: &InputDocument) -> Result<(AnalysisReport, Value)> {
    let g = doc.group()?;
    let e = doc.endomorphism(&g)?;
    let report = topological_entropy(&g, &e, doc.options.tol)?;
    let value = analysis_json(doc, &report);
    Ok((report, value))
}

/// Entropy report plus the finite-order check for solvable inputs where it
/// applies.
pub fn full_analysis(doc: &InputDocument) -> Result<Value> {
    let (_, mut value) = analyze_document(doc)?;
    let g = doc.group()?;
    let e = doc.endomorphism(&g)?;
    let check = check_toral_induced_finite_order(&g, &e);
    if let Err(err @ Error::TheoremViolation { .. }) = &check {
        return Err(err.clone());
    }
    value["toral_finite_order"] = finite_order_json(&check);
    Ok(value)
}

/// Re-reads the input embedded in a report.
pub fn embedded_input(report: &Value) -> Result<InputDocument> {
    let input = report
        .get("input")
        .ok_or_else(|| Error::parse("report", "no embedded input"))?;
    crate::input::parse_input(&input.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_input;

    #[test]
    fn report_round_trip() {
        let doc = parse_input(
            r#"{"name": "c", "algebra": {"dim": 2}, "lattice": [["0", "1"]],
                "endomorphism": [["2", "0"], ["0", "2"]]}"#,
        )
        .unwrap();
        let (_, first) = analyze_document(&doc).unwrap();
        let again = embedded_input(&first).unwrap();
        let (_, second) = analyze_document(&again).unwrap();
        assert_eq!(first, second);
        assert_eq!(first["entropy"]["certificate_text"], "t - 2");
        assert_eq!(first["bowen_bound"]["certificate_text"], "t^2 - 4t + 4");
    }
}
