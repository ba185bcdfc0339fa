//! Command-line front end for the `lie-entropy` library.
//!
//! Exit codes: 0 on success, 1 when the input is wrong (parse, shape or
//! validation failures, catalog mismatches), 2 when a valid input falls
//! outside what the pipeline supports (a stage aborts).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lie_entropy::catalog::{builtin_catalog, find_entry, run_all};
use lie_entropy::estimator::{spanning_entropy_estimate, GridDynamics, SpanningEstimate};
use lie_entropy::group::{validate_endomorphism, validate_presentation, PresentedGroup};
use lie_entropy::input::{parse_input, InputDocument, Mode};
use lie_entropy::report::{analyze_document, entropy_json, full_analysis};
use lie_entropy::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_ABORT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "lie-entropy", version, about = "Topological entropy of Lie group endomorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the algebra, the lattice generators and the endomorphism.
    Validate(Source),
    /// Entropy report as JSON.
    Entropy(Source),
    /// Entropy report with the Li-Yorke chain and the toral finite-order check.
    Analyze(Source),
    /// Numerical spanning-set estimate on the torus action.
    Estimate(EstimateArgs),
    /// List, print or run the built-in examples.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug)]
struct Source {
    /// Input JSON document.
    #[arg(long, conflicts_with = "catalog")]
    input: Option<PathBuf>,
    /// Name of a built-in catalog entry.
    #[arg(long)]
    catalog: Option<String>,
    /// Overrides the document's tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct EstimateArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 0.05)]
    epsilon: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    /// Print this entry's input document.
    #[arg(long, conflicts_with = "run_all")]
    catalog: Option<String>,
    /// Run every entry and compare with its expected record.
    #[arg(long)]
    run_all: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Outcome of a command: what to print and the exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: EXIT_OK }
    }
}

/// `Err` carries the message for stderr and the exit code.
type CmdResult = Result<Outcome, (String, i32)>;

fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::Parse { .. }
        | Error::Dimension(_)
        | Error::InvalidPresentation(_)
        | Error::NotEndomorphism(..)
        | Error::LatticeNotPreserved { .. }
        | Error::Parameter(_) => EXIT_INVALID,
        _ => EXIT_ABORT,
    }
}

fn fail(e: Error) -> (String, i32) {
    let code = exit_code(&e);
    (format!("error: {e}"), code)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn load(source: &Source) -> Result<InputDocument, (String, i32)> {
    let mut doc = match (&source.input, &source.catalog) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| (format!("error: cannot read {}: {e}", path.display()), EXIT_INVALID))?;
            parse_input(&text).map_err(fail)?
        }
        (None, Some(name)) => find_entry(name)
            .ok_or_else(|| (format!("error: no catalog entry named `{name}`"), EXIT_INVALID))?
            .document,
        _ => return Err(("error: give exactly one of --input or --catalog".into(), EXIT_INVALID)),
    };
    if let Some(tol) = source.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err((format!("error: --tol must be positive, got {tol}"), EXIT_INVALID));
        }
        doc.options.tol = tol;
    }
    Ok(doc)
}

fn validate(source: &Source) -> CmdResult {
    let doc = load(source)?;
    let g = PresentedGroup {
        name: doc.name.clone(),
        algebra: doc.algebra.clone(),
        lattice_logs: doc.lattice.clone(),
    };
    let presentation = validate_presentation(&g);
    let mut valid = presentation.is_valid();
    let issues: Vec<String> = presentation.issues.iter().map(ToString::to_string).collect();
    let endomorphism = match (&doc.endomorphism, valid) {
        (None, _) => json!({ "status": "absent" }),
        (Some(_), false) => json!({ "status": "skipped" }),
        (Some(d), true) => match validate_endomorphism(&g, d) {
            Ok(e) => json!({
                "status": "valid",
                "surjective": e.surjective,
                "lattice_action": e.lattice_action.to_rows().iter()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
            Err(err) => {
                valid = false;
                json!({ "status": "invalid", "reason": err.to_string() })
            }
        },
    };
    let report = json!({
        "name": doc.name,
        "valid": valid,
        "presentation_issues": issues,
        "endomorphism": endomorphism,
    });
    Ok(Outcome {
        stdout: pretty(&report),
        code: if valid { EXIT_OK } else { EXIT_INVALID },
    })
}

fn entropy(source: &Source) -> CmdResult {
    let doc = load(source)?;
    let (_, value) = analyze_document(&doc).map_err(fail)?;
    Ok(Outcome::ok(pretty(&value)))
}

fn torus_grid(doc: &InputDocument) -> Result<(GridDynamics, Value), (String, i32)> {
    let (report, _) = analyze_document(doc).map_err(fail)?;
    let action = report.torus.action.expect("pipeline attaches the torus action");
    if action.dim() == 0 || action.dim() > 3 {
        return Err((
            format!("error: the torus T(G_φ) has dimension {}; estimates need 1 to 3", action.dim()),
            EXIT_ABORT,
        ));
    }
    let grid = GridDynamics::from_torus(&action).map_err(fail)?;
    Ok((grid, entropy_json(&report.entropy)))
}

fn estimate_json(est: &SpanningEstimate, exact: Value) -> Value {
    let (lo, hi) = est.band();
    json!({
        "estimate": est,
        "slope_band": [lo, hi],
        "exact_entropy": exact,
        "note": "numerical estimate: can refute the exact value, never certify it",
    })
}

fn analyze(source: &Source) -> CmdResult {
    let doc = load(source)?;
    let mut value = full_analysis(&doc).map_err(fail)?;
    if doc.options.mode == Mode::WithEstimate {
        value["estimate"] = match torus_grid(&doc) {
            Ok((grid, exact)) => {
                let est = spanning_entropy_estimate(&grid, 10, 0.05, None).map_err(fail)?;
                estimate_json(&est, exact)
            }
            Err((msg, _)) => json!({ "status": "skipped", "reason": msg }),
        };
    }
    Ok(Outcome::ok(pretty(&value)))
}

fn csv_text<F>(write_rows: F) -> Result<String, (String, i32)>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    write_rows(&mut w).map_err(|e| (format!("error: {e}"), EXIT_ABORT))?;
    let bytes = w.into_inner().map_err(|e| (format!("error: {e}"), EXIT_ABORT))?;
    Ok(String::from_utf8(bytes).expect("csv writes utf-8"))
}

fn estimate(args: &EstimateArgs) -> CmdResult {
    let doc = load(&args.source)?;
    let (grid, exact) = torus_grid(&doc)?;
    let est = spanning_entropy_estimate(&grid, args.n_max, args.epsilon, None).map_err(fail)?;
    let stdout = match args.format {
        Format::Json => pretty(&estimate_json(&est, exact)),
        Format::Csv => csv_text(|w| {
            w.write_record(["n", "spanning_count", "separated_count"])?;
            for ((n, up), lo) in est.n_values.iter().zip(&est.counts).zip(&est.lower_counts) {
                w.write_record([n.to_string(), up.to_string(), lo.to_string()])?;
            }
            Ok(())
        })?,
    };
    Ok(Outcome::ok(stdout))
}

fn catalog(args: &CatalogArgs) -> CmdResult {
    if let Some(name) = &args.catalog {
        let entry = find_entry(name)
            .ok_or_else(|| (format!("error: no catalog entry named `{name}`"), EXIT_INVALID))?;
        return Ok(Outcome::ok(entry.document.to_json_string() + "\n"));
    }
    if !args.run_all {
        let list: Vec<Value> = builtin_catalog()
            .iter()
            .map(|e| json!({ "name": e.name, "expected": e.expected, "oracle": e.oracle }))
            .collect();
        return Ok(match args.format {
            Format::Json => Outcome::ok(pretty(&Value::Array(list))),
            Format::Csv => Outcome::ok(csv_text(|w| {
                w.write_record(["name", "expected_entropy", "li_yorke"])?;
                for e in builtin_catalog() {
                    w.write_record([e.name, &e.expected.entropy.to_string(), e.expected.li_yorke.as_str()])?;
                }
                Ok(())
            })?),
        });
    }
    let outcomes = run_all();
    let all_passed = outcomes.iter().all(|o| o.passed);
    let stdout = match args.format {
        Format::Json => pretty(&json!({ "all_passed": all_passed, "entries": outcomes })),
        Format::Csv => csv_text(|w| {
            w.write_record(["name", "status", "entropy", "expected_entropy", "verdict", "failures"])?;
            for o in &outcomes {
                w.write_record([
                    o.name.clone(),
                    if o.passed { "PASS" } else { "FAIL" }.into(),
                    o.entropy.map(|h| h.to_string()).unwrap_or_default(),
                    o.expected_entropy.to_string(),
                    o.verdict.map(|v| v.as_str().to_string()).unwrap_or_default(),
                    o.failures.join("; "),
                ])?;
            }
            Ok(())
        })?,
    };
    Ok(Outcome {
        stdout,
        code: if all_passed { EXIT_OK } else { EXIT_INVALID },
    })
}

/// Runs the CLI on `args` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Validate(s) => validate(s),
        Command::Entropy(s) => entropy(s),
        Command::Analyze(s) => analyze(s),
        Command::Estimate(a) => estimate(a),
        Command::Catalog(a) => catalog(a),
    };
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err((message, code)) => {
            let _ = writeln!(err, "{message}");
            code
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
