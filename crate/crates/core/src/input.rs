//! JSON input documents.
//!
//! ```json
//! {
//!   "name": "cstar-squaring",
//!   "algebra": { "dim": 2, "basis": ["e1", "e2"], "brackets": [] },
//!   "lattice": [["0", "1"]],
//!   "endomorphism": [["2", "0"], ["0", "2"]],
//!   "options": { "tol": 1e-9, "mode": "standard" }
//! }
//! ```
//!
//! Brackets are sparse triples `[i, j, k, "p/q"]` meaning `c[i][j][k] = p/q`
//! (indices from 0). The endomorphism is row-major with column `j` the image
//! of `e_j`. Rationals may be written as strings or as JSON integers.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::group::{validate_endomorphism, GroupEndomorphism, PresentedGroup};
use crate::lie_algebra::LieAlgebra;
use crate::linalg::{format_rational, int, parse_rational, MatrixQ, Rational};
use crate::{Error, Result, DEFAULT_TOL};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Standard,
    /// Also run the numerical estimator on the torus action.
    WithEstimate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    pub tol: f64,
    pub mode: Mode,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            mode: Mode::Standard,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InputDocument {
    pub name: String,
    pub algebra: LieAlgebra,
    pub lattice: Vec<Vec<Rational>>,
    pub endomorphism: Option<MatrixQ>,
    pub options: Options,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<(usize, usize, usize, RawRational)>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    tol: Option<f64>,
    mode: Option<Mode>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    name: Option<String>,
    algebra: RawAlgebra,
    #[serde(default)]
    lattice: Vec<Vec<RawRational>>,
    #[serde(default)]
    endomorphism: Option<Vec<Vec<RawRational>>>,
    #[serde(default)]
    options: RawOptions,
}

fn rational(raw: &RawRational, location: impl Fn() -> String) -> Result<Rational> {
    match raw {
        RawRational::Int(v) => Ok(int(*v)),
        RawRational::Text(s) => parse_rational(s).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(location(), message),
            other => other,
        }),
    }
}

pub fn parse_input(text: &str) -> Result<InputDocument> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    let n = raw.algebra.dim;
    let names = match raw.algebra.basis {
        Some(names) if names.len() != n => {
            return Err(Error::parse(
                "algebra.basis",
                format!("{} names for dimension {n}", names.len()),
            ))
        }
        Some(names) => names,
        None => (1..=n).map(|i| format!("e{i}")).collect(),
    };
    let mut triples = Vec::with_capacity(raw.algebra.brackets.len());
    for (pos, (i, j, k, c)) in raw.algebra.brackets.iter().enumerate() {
        let loc = || format!("algebra.brackets[{pos}]");
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::parse(loc(), format!("index out of range for dimension {n}")));
        }
        triples.push((*i, *j, *k, rational(c, loc)?));
    }
    let algebra = LieAlgebra::from_sparse(names, &triples).map_err(|e| Error::parse("algebra.brackets", e.to_string()))?;

    let mut lattice = Vec::with_capacity(raw.lattice.len());
    for (r, row) in raw.lattice.iter().enumerate() {
        if row.len() != n {
            return Err(Error::parse(
                format!("lattice[{r}]"),
                format!("vector of length {} in dimension {n}", row.len()),
            ));
        }
        let v = row
            .iter()
            .enumerate()
            .map(|(c, x)| rational(x, || format!("lattice[{r}][{c}]")))
            .collect::<Result<Vec<_>>>()?;
        lattice.push(v);
    }

    let endomorphism = match raw.endomorphism {
        None => None,
        Some(rows) => {
            if rows.len() != n || rows.iter().any(|row| row.len() != n) {
                let shape = rows.iter().map(|r| r.len().to_string()).collect::<Vec<_>>().join(", ");
                return Err(Error::parse(
                    "endomorphism",
                    format!("expected a {n}x{n} matrix, got {} rows of lengths [{shape}]", rows.len()),
                ));
            }
            let mut data = Vec::with_capacity(n * n);
            for (r, row) in rows.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    data.push(rational(x, || format!("endomorphism[{r}][{c}]"))?);
                }
            }
            Some(MatrixQ::new(n, n, data)?)
        }
    };

    let tol = raw.options.tol.unwrap_or(DEFAULT_TOL);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::parse("options.tol", format!("tolerance must be positive, got {tol}")));
    }
    Ok(InputDocument {
        name: raw.name.unwrap_or_else(|| "input".into()),
        algebra,
        lattice,
        endomorphism,
        options: Options {
            tol,
            mode: raw.options.mode.unwrap_or_default(),
        },
    })
}

fn rational_strings(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect())
}

impl InputDocument {
    /// Canonical JSON form; `parse_input` of its text gives back `self`.
    pub fn to_json(&self) -> Value {
        let brackets: Vec<Value> = self
            .algebra
            .sparse_triples()
            .iter()
            .map(|(i, j, k, c)| json!([i, j, k, format_rational(c)]))
            .collect();
        let mut doc = json!({
            "name": self.name,
            "algebra": {
                "dim": self.algebra.dim(),
                "basis": self.algebra.names(),
                "brackets": brackets,
            },
            "lattice": self.lattice.iter().map(|v| rational_strings(v)).collect::<Vec<_>>(),
            "options": { "tol": self.options.tol, "mode": self.options.mode },
        });
        if let Some(d) = &self.endomorphism {
            doc["endomorphism"] = Value::Array(d.to_rows().iter().map(|r| rational_strings(r)).collect());
        }
        doc
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn group(&self) -> Result<PresentedGroup> {
        PresentedGroup::new(self.name.clone(), self.algebra.clone(), self.lattice.clone())
    }

    pub fn endomorphism(&self, g: &PresentedGroup) -> Result<GroupEndomorphism> {
        let d = self
            .endomorphism
            .as_ref()
            .ok_or_else(|| Error::parse("endomorphism", "missing"))?;
        validate_endomorphism(g, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CSTAR: &str = r#"{
        "name": "cstar-squaring",
        "algebra": { "dim": 2, "basis": ["x", "y"], "brackets": [] },
        "lattice": [["0", 1]],
        "endomorphism": [["2", "0"], ["0", "2"]]
    }"#;

    #[test]
    fn parses_and_round_trips() {
        let doc = parse_input(CSTAR).unwrap();
        assert_eq!(doc.algebra.dim(), 2);
        assert_eq!(doc.lattice.len(), 1);
        assert_eq!(doc.options, Options::default());
        let again = parse_input(&doc.to_json_string()).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn zero_denominator_is_located() {
        let text = r#"{"algebra": {"dim": 2, "brackets": [[0, 1, 1, "1/0"]]}}"#;
        match parse_input(text) {
            Err(Error::Parse { location, message }) => {
                assert_eq!(location, "algebra.brackets[0]");
                assert!(message.contains("denominator"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_square_endomorphism_is_a_shape_error() {
        let text = r#"{"algebra": {"dim": 2}, "endomorphism": [["1", "0"], ["0"]]}"#;
        assert!(matches!(parse_input(text), Err(Error::Parse { location, .. }) if location == "endomorphism"));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"algebra": {"dim": 1}, "extra": 1}"#;
        match parse_input(text) {
            Err(Error::Parse { location, message }) => {
                assert!(location.starts_with("line 1"));
                assert!(message.contains("extra"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn antisymmetric_partner_round_trips() {
        let text = r#"{"algebra": {"dim": 3, "brackets": [[0, 1, 2, "1"], [1, 0, 2, "1"]]}}"#;
        let doc = parse_input(text).unwrap();
        assert_eq!(parse_input(&doc.to_json_string()).unwrap(), doc);
    }
}
