//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use evolkit::radical::{
    ideal_sandwich, is_modular_ideal_support, jacobson_radical, maximal_modular_ideals, square_ideal, IdealBasis,
    IdealDescriptor, RadicalClass,
};
use evolkit::spectra::{
    m_semisimple_check, m_spectrum_with_tol, quasi_inverse, spectral_radii, spectrally_semisimple_check,
    spectrum_with_tol, CheckOptions, Certainty, Mode, SemisimplicityVerdict, SpectrumResult, Verdict,
};
use evolkit::{DescentGraph, Element, EvolutionAlgebra, GScalar, IndexSet};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::document::{parse_document, parse_element, parse_index_list, scalar_value, DocumentError};
use crate::report::{complex_value, emit_report, float_value, Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_NUMERIC: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

pub const SEED_ENV: &str = "EVOLKIT_SEED";

#[derive(Debug, Parser)]
#[command(name = "evolkit", version, about = "Radicals, ideals and spectra of evolution algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized checks (falls back to $EVOLKIT_SEED, then 0).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Random probes per index in semisimplicity checks.
    #[arg(long, global = true, default_value_t = 32)]
    trials: usize,
    /// Tolerance for floating-point root finding and rank tests.
    #[arg(long, global = true, default_value_t = evolkit::exactla::DEFAULT_TOL)]
    tol: f64,
    /// Exit with status 3 when a verdict is not certain.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Numeric,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Unit, degeneracy, radical, quotient and semisimplicity verdicts.
    Classify { file: PathBuf },
    /// Modular indexes, the Jacobson radical and the quotient.
    Radical { file: PathBuf },
    /// Maximal modular ideals and the ideals generated by squares.
    Ideals {
        file: PathBuf,
        /// One-based indexes spanning a candidate modular ideal, e.g. "1,2,3".
        #[arg(long)]
        validate_support: Option<String>,
    },
    /// Spectrum and m-spectrum of an element.
    Spectrum {
        file: PathBuf,
        /// Comma-separated coefficients, e.g. "3,2".
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        m_only: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
    },
    /// Descendants of a (one-based) index.
    Descendants {
        file: PathBuf,
        #[arg(long)]
        index: usize,
        /// Only the descendants of exactly this generation.
        #[arg(long)]
        generation: Option<usize>,
    },
    /// Product of two elements.
    Product {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Quasi-inverse of an element, if any.
    QuasiInverse {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Radical { .. } => "radical",
            Command::Ideals { .. } => "ideals",
            Command::Spectrum { .. } => "spectrum",
            Command::Descendants { .. } => "descendants",
            Command::Product { .. } => "product",
            Command::QuasiInverse { .. } => "quasi-inverse",
        }
    }

    fn file(&self) -> &PathBuf {
        match self {
            Command::Classify { file }
            | Command::Radical { file }
            | Command::Ideals { file, .. }
            | Command::Spectrum { file, .. }
            | Command::Descendants { file, .. }
            | Command::Product { file, .. }
            | Command::QuasiInverse { file, .. } => file,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Numeric(String),
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<evolkit::Error> for Failure {
    fn from(e: evolkit::Error) -> Self {
        match e {
            evolkit::Error::NumericFailure { .. } => Failure::Numeric(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// What a run prints and returns.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

struct Context {
    opts: CheckOptions,
    strict: bool,
    undetermined: bool,
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Input(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    RunOutput { code: EXIT_OK, stdout: text, stderr: String::new(), report: None }
                }
                _ => RunOutput { code: EXIT_INPUT, stdout: String::new(), stderr: text, report: None },
            };
        }
    };
    let name = cli.command.name();
    let (digest, text) = match std::fs::read(cli.command.file()) {
        Ok(bytes) => (hex_digest(&bytes), String::from_utf8(bytes)),
        Err(e) => {
            let msg = format!("cannot read {}: {e}", cli.command.file().display());
            return failure(Report::new(name, ""), cli.format, EXIT_INPUT, msg);
        }
    };
    let mut report = Report::new(name, digest);
    let Ok(text) = text else {
        return failure(report, cli.format, EXIT_INPUT, "input is not valid UTF-8".into());
    };
    let outcome = (|| -> Result<Context, Failure> {
        let seed = resolve_seed(cli.seed)?;
        let mut ctx = Context { opts: CheckOptions { trials: cli.trials, seed, tol: cli.tol }, strict: cli.strict, undetermined: false };
        let doc = parse_document(&text)?;
        execute(&cli.command, &doc.algebra, &mut ctx, &mut report)?;
        Ok(ctx)
    })();
    match outcome {
        Ok(ctx) => {
            let code = if ctx.strict && ctx.undetermined { EXIT_UNDETERMINED } else { EXIT_OK };
            let stderr = if code == EXIT_UNDETERMINED { "strict: a verdict is not certain\n".to_owned() } else { String::new() };
            RunOutput { code, stdout: emit_report(&report, cli.format), stderr, report: Some(report) }
        }
        Err(Failure::Input(msg)) => failure(report, cli.format, EXIT_INPUT, msg),
        Err(Failure::Numeric(msg)) => failure(report, cli.format, EXIT_NUMERIC, msg),
    }
}

fn failure(mut report: Report, format: Format, code: i32, msg: String) -> RunOutput {
    report.results.clear();
    report.error = Some(msg.clone());
    RunOutput { code, stdout: emit_report(&report, format), stderr: format!("error: {msg}\n"), report: Some(report) }
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn indexes(s: &IndexSet) -> Value {
    json!(s.iter().map(|i| i + 1).collect::<Vec<_>>())
}

fn element_value(x: &Element) -> Value {
    Value::Array(x.coeffs().iter().map(scalar_value).collect())
}

fn scalars(xs: &[GScalar]) -> Value {
    Value::Array(xs.iter().map(scalar_value).collect())
}

fn classification_name(c: RadicalClass) -> &'static str {
    match c {
        RadicalClass::Semisimple => "semisimple",
        RadicalClass::Radical => "radical",
        RadicalClass::Intermediate => "intermediate",
    }
}

fn certainty_name(c: Certainty) -> &'static str {
    match c {
        Certainty::Exact => "exact",
        Certainty::Mixed => "mixed",
    }
}

fn ideal_value(ideal: &IdealDescriptor, n: usize) -> Value {
    let kind = match ideal.basis_kind {
        IdealBasis::CoordinateSpan => "coordinate_span",
        IdealBasis::VectorSpan => "vector_span",
    };
    json!({
        "kind": kind,
        "support": indexes(&ideal.support),
        "dimension": ideal.dimension(),
        "basis": ideal.spanning_vectors(n).iter().map(element_value).collect::<Vec<_>>(),
        "modular_unit": ideal.modular_unit.as_ref().map(element_value),
    })
}

fn verdict_value(key: &str, v: &SemisimplicityVerdict, n: usize, ctx: &mut Context, report: &mut Report) -> Value {
    let witnesses: Vec<Value> = v
        .witnesses
        .iter()
        .map(|w| {
            let eig = match (&w.eigenvalue, w.numeric_eigenvalue) {
                (Some(x), _) => scalar_value(x),
                (None, Some(z)) => complex_value(z),
                (None, None) => Value::Null,
            };
            json!({"index": w.index + 1, "element": element_value(&w.element), "eigenvalue": eig, "exact": w.is_exact()})
        })
        .collect();
    let counterexample = v.counterexample.as_ref().map(|c| {
        json!({"index": c.index + 1, "ideal": ideal_value(&c.ideal, n), "certified": c.certified})
    });
    let flag = match v.value {
        Verdict::Yes | Verdict::No => "exact",
        Verdict::ProbablyYes => "mixed",
        Verdict::ProbablyNo => "probabilistic",
        Verdict::Undetermined => "undetermined",
    };
    report.flag(key, flag);
    if !v.value.is_certain() {
        ctx.undetermined = true;
        report.warn(format!("{key} verdict is {}", v.value.as_str()));
    }
    json!({
        "value": v.value.as_str(),
        "witnesses": witnesses,
        "counterexample": counterexample,
        "unresolved": v.unresolved.iter().map(|i| i + 1).collect::<Vec<_>>(),
    })
}

fn spectrum_value(key: &str, s: &SpectrumResult, report: &mut Report) -> Value {
    report.flag(key, certainty_name(s.certainty));
    if s.certainty == Certainty::Mixed {
        report.warn(format!("{key}: characteristic polynomial has a factor {} without Gaussian-rational roots", s.residual));
    }
    json!({
        "points": scalars(&s.exact_points),
        "numeric_points": s.numeric_points.iter().map(|z| complex_value(*z)).collect::<Vec<_>>(),
        "residual": s.residual.to_string(),
        "contains_zero": s.contains_zero,
        "certainty": certainty_name(s.certainty),
    })
}

fn check_element(x: &Element, n: usize) -> Result<(), Failure> {
    if x.dim() != n {
        return Err(Failure::Input(format!("element has {} coefficients, algebra has dimension {n}", x.dim())));
    }
    Ok(())
}

fn one_based(index: usize, n: usize) -> Result<usize, Failure> {
    if index == 0 || index > n {
        return Err(Failure::Input(format!("index {index} outside 1..={n}")));
    }
    Ok(index - 1)
}

fn execute(cmd: &Command, a: &EvolutionAlgebra, ctx: &mut Context, report: &mut Report) -> Result<(), Failure> {
    let n = a.dim();
    match cmd {
        Command::Classify { .. } => {
            let rad = jacobson_radical(a);
            report.insert("dimension", json!(n));
            if let Some(labels) = a.labels() {
                report.insert("labels", json!(labels));
            }
            let unit = a.unit_of();
            report.insert("has_unit", json!(unit.is_some()));
            report.insert("unit", unit.as_ref().map(element_value).unwrap_or(Value::Null));
            report.insert("degenerate", json!(a.is_degenerate()));
            report.insert("annihilator_support", indexes(&a.annihilator()));
            report.insert("nonzero_trivial", json!(a.is_nonzero_trivial()));
            report.insert("modular_indexes", indexes(&rad.modular_indexes));
            report.insert("radical_support", indexes(&rad.radical_support));
            report.insert("classification", json!(classification_name(rad.classification)));
            report.insert("quotient_diag", scalars(&rad.quotient_diag));
            report.insert("semisimple", json!(rad.classification == RadicalClass::Semisimple));
            let sv = spectrally_semisimple_check(a, &ctx.opts)?;
            let sv = verdict_value("spectrally_semisimple", &sv, n, ctx, report);
            report.insert("spectrally_semisimple", sv);
            let mv = m_semisimple_check(a, &ctx.opts)?;
            let mv = verdict_value("m_semisimple", &mv, n, ctx, report);
            report.insert("m_semisimple", mv);
            report.insert("options", json!({"seed": ctx.opts.seed, "trials": ctx.opts.trials, "tol": ctx.opts.tol}));
        }
        Command::Radical { .. } => {
            let rad = jacobson_radical(a);
            report.insert("modular_indexes", indexes(&rad.modular_indexes));
            report.insert("radical_support", indexes(&rad.radical_support));
            report.insert("radical_dimension", json!(rad.radical_support.len()));
            report.insert("classification", json!(classification_name(rad.classification)));
            report.insert("quotient_diag", scalars(&rad.quotient_diag));
        }
        Command::Ideals { validate_support, .. } => {
            let maximal: Vec<Value> = maximal_modular_ideals(a).iter().map(|m| ideal_value(m, n)).collect();
            report.insert("maximal_modular_ideals", Value::Array(maximal));
            let squares = (0..n)
                .map(|i| Ok(json!({"index": i + 1, "ideal": ideal_value(&square_ideal(a, i)?, n)})))
                .collect::<Result<Vec<_>, Failure>>()?;
            report.insert("square_ideals", Value::Array(squares));
            if let Some(text) = validate_support {
                let support = parse_index_list(text, n)?;
                let (ok, unit) = is_modular_ideal_support(a, &support)?;
                let sandwich = ideal_sandwich(a, &support)?;
                report.insert(
                    "validation",
                    json!({
                        "support": indexes(&support),
                        "is_modular_ideal": ok,
                        "modular_unit": unit.as_ref().map(element_value),
                        "sandwich": {
                            "lower": ideal_value(&sandwich.lower, n),
                            "upper": ideal_value(&sandwich.upper, n),
                            "equal": sandwich.equal,
                        },
                    }),
                );
            }
        }
        Command::Spectrum { element, m_only, mode, .. } => {
            let x = parse_element(element, n)?;
            check_element(&x, n)?;
            let mode = match mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Numeric => Mode::Numeric,
            };
            report.insert("element", element_value(&x));
            let ms = m_spectrum_with_tol(a, &x, mode, ctx.opts.tol)?;
            let v = spectrum_value("m_spectrum", &ms, report);
            report.insert("m_spectrum", v);
            if !m_only {
                let s = spectrum_with_tol(a, &x, mode, ctx.opts.tol)?;
                let v = spectrum_value("spectrum", &s, report);
                report.insert("spectrum", v);
                let r = spectral_radii(a, &x)?;
                report.insert(
                    "radii",
                    json!({
                        "rho": float_value(r.rho),
                        "rho_m": float_value(r.rho_m),
                        "rho_zero_exact": r.rho_zero_exact,
                        "rho_m_zero_exact": r.rho_m_zero_exact,
                    }),
                );
            }
        }
        Command::Descendants { index, generation, .. } => {
            let i = one_based(*index, n)?;
            let g = DescentGraph::new(a);
            report.insert("index", json!(index));
            match generation {
                Some(m) => {
                    if *m == 0 {
                        return Err(Failure::Input("generations are numbered from 1".into()));
                    }
                    report.insert("generation", json!(m));
                    report.insert("descendants", indexes(&g.nth_generation(i, *m)?));
                }
                None => {
                    let d = g.descendants(i)?;
                    report.insert("first_generation", indexes(&g.first_generation(i)?));
                    report.insert("on_cycle", json!(d.contains(&i)));
                    report.insert("descendants", indexes(&d));
                }
            }
        }
        Command::Product { a: ta, b: tb, .. } => {
            let x = parse_element(ta, n)?;
            let y = parse_element(tb, n)?;
            report.insert("a", element_value(&x));
            report.insert("b", element_value(&y));
            report.insert("product", element_value(&a.product(&x, &y)?));
        }
        Command::QuasiInverse { element, .. } => {
            let x = parse_element(element, n)?;
            report.insert("element", element_value(&x));
            let q = quasi_inverse(a, &x)?;
            report.insert("quasi_invertible", json!(q.is_some()));
            report.insert("quasi_inverse", q.as_ref().map(element_value).unwrap_or(Value::Null));
        }
    }
    Ok(())
}
