//! Reports and their JSON and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 of the input file, hex encoded.
    pub input_digest: String,
    pub results: Map<String, Value>,
    /// Per-result certainty: `exact`, `mixed` or `probabilistic`.
    pub certainty: BTreeMap<String, String>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            input_digest: input_digest.into(),
            results: Map::new(),
            certainty: BTreeMap::new(),
            warnings: Vec::new(),
            error: None,
        }
    }

    pub fn insert(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_owned(), value);
    }

    pub fn flag(&mut self, key: &str, certainty: &str) {
        self.certainty.insert(key.to_owned(), certainty.to_owned());
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn float_value(x: f64) -> Value {
    json!(round12(x))
}

/// Parts below `1e-12` of the modulus are printed as zero.
pub fn complex_value(z: Complex64) -> Value {
    let floor = 1e-12 * z.norm().max(1.0);
    let clean = |x: f64| if x.abs() < floor { 0.0 } else { round12(x) };
    json!({"re": clean(z.re), "im": clean(z.im)})
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            // serde_json maps are ordered, so keys come out sorted.
            let value = serde_json::to_value(report).expect("reports serialize");
            let mut s = serde_json::to_string_pretty(&value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn leaf(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", items.iter().filter_map(leaf).collect::<Vec<_>>().join(", ")))
        }
        Value::Object(obj) if obj.len() == 2 && obj.contains_key("re") && obj.contains_key("im") => {
            Some(format!("({}, {})", leaf(&obj["re"])?, leaf(&obj["im"])?))
        }
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    if let Some(s) = leaf(v) {
        let _ = writeln!(out, "{prefix} = {s}");
        return;
    }
    match v {
        Value::Object(obj) => {
            if obj.is_empty() {
                let _ = writeln!(out, "{prefix} = {{}}");
            }
            for (k, x) in obj {
                flatten(&format!("{prefix}.{k}"), x, out);
            }
        }
        Value::Array(items) => {
            for (k, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{k}]"), x, out);
            }
        }
        _ => unreachable!("leaves handled above"),
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", report.command);
    let _ = writeln!(out, "input_digest: {}", report.input_digest);
    if let Some(e) = &report.error {
        let _ = writeln!(out, "error: {e}");
    }
    for (k, c) in &report.certainty {
        let _ = writeln!(out, "certainty.{k}: {c}");
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    for (k, v) in &report.results {
        flatten(k, v, &mut out);
    }
    out
}
