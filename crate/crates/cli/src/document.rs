//! The JSON algebra file format.
//!
//! ```json
//! {"dimension": 2, "matrix": [["-1/2", "3/4"], ["-1/3", "1/2"]], "labels": ["a", "b"]}
//! ```
//!
//! `matrix[k][i]` is the coefficient of `e_k` in `e_i^2`, so column `i`
//! describes `e_i^2`. Cells are `"p"`, `"p/q"` or `{"re": "p/q", "im": "r/s"}`;
//! plain JSON integers are tolerated, floats are not.

use std::collections::BTreeMap;

use evolkit::{DenseMatrix, Element, EvolutionAlgebra, GScalar, IndexSet};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DocumentError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

fn field(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Field { path: path.into(), message: message.into() }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraDocument {
    pub algebra: EvolutionAlgebra,
    pub metadata: BTreeMap<String, String>,
}

fn parse_scalar_text(path: &str, text: &str) -> Result<GScalar, DocumentError> {
    text.parse::<GScalar>().map_err(|e| field(path, e.to_string()))
}

fn parse_cell(path: &str, cell: &Value) -> Result<GScalar, DocumentError> {
    match cell {
        Value::String(s) => parse_scalar_text(path, s),
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(GScalar::from_int(k)),
            None => Err(field(path, format!("{n} is not an integer; write fractions as \"p/q\" strings"))),
        },
        Value::Object(obj) => {
            for key in obj.keys() {
                if key != "re" && key != "im" {
                    return Err(field(path, format!("unexpected key {key:?} in complex scalar")));
                }
            }
            let part = |key: &str| -> Result<GScalar, DocumentError> {
                let sub = format!("{path}.{key}");
                match obj.get(key) {
                    None => Ok(GScalar::zero()),
                    Some(v) => {
                        let x = parse_cell(&sub, v)?;
                        if x.is_real() {
                            Ok(x)
                        } else {
                            Err(field(sub, "expected a real rational"))
                        }
                    }
                }
            };
            let re = part("re")?;
            let im = part("im")?;
            Ok(re + im * GScalar::i())
        }
        other => Err(field(path, format!("expected a scalar string, found {other}"))),
    }
}

/// Parses a document into an algebra plus its free-form metadata.
pub fn parse_document(text: &str) -> Result<AlgebraDocument, DocumentError> {
    let root: Value = serde_json::from_str(text).map_err(|e| DocumentError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = root.as_object().ok_or_else(|| field("$", "expected a JSON object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "dimension" | "matrix" | "labels" | "metadata") {
            return Err(field(key.as_str(), "unknown field"));
        }
    }
    let n = obj
        .get("dimension")
        .ok_or_else(|| field("dimension", "missing"))?
        .as_u64()
        .ok_or_else(|| field("dimension", "expected a positive integer"))? as usize;
    if n == 0 {
        return Err(field("dimension", "must be at least 1"));
    }
    let rows = obj
        .get("matrix")
        .ok_or_else(|| field("matrix", "missing"))?
        .as_array()
        .ok_or_else(|| field("matrix", "expected an array of rows"))?;
    if rows.len() != n {
        return Err(field("matrix", format!("expected {n} rows, found {}", rows.len())));
    }
    let mut m = DenseMatrix::zeros(n, n);
    for (k, row) in rows.iter().enumerate() {
        let cells = row.as_array().ok_or_else(|| field(format!("matrix[{k}]"), "expected an array"))?;
        if cells.len() != n {
            return Err(field(format!("matrix[{k}]"), format!("expected {n} entries, found {}", cells.len())));
        }
        for (i, cell) in cells.iter().enumerate() {
            m[(k, i)] = parse_cell(&format!("matrix[{k}][{i}]"), cell)?;
        }
    }
    let mut algebra = EvolutionAlgebra::from_structure_matrix(&m).map_err(|e| field("matrix", e.to_string()))?;
    if let Some(labels) = obj.get("labels") {
        let list = labels.as_array().ok_or_else(|| field("labels", "expected an array of strings"))?;
        let names = list
            .iter()
            .enumerate()
            .map(|(k, v)| v.as_str().map(str::to_owned).ok_or_else(|| field(format!("labels[{k}]"), "expected a string")))
            .collect::<Result<Vec<_>, _>>()?;
        algebra = algebra.with_labels(names).map_err(|e| field("labels", e.to_string()))?;
    }
    let mut metadata = BTreeMap::new();
    if let Some(meta) = obj.get("metadata") {
        let map = meta.as_object().ok_or_else(|| field("metadata", "expected an object"))?;
        for (k, v) in map {
            let s = v.as_str().ok_or_else(|| field(format!("metadata.{k}"), "expected a string"))?;
            metadata.insert(k.clone(), s.to_owned());
        }
    }
    Ok(AlgebraDocument { algebra, metadata })
}

pub fn parse_algebra_document(text: &str) -> Result<EvolutionAlgebra, DocumentError> {
    parse_document(text).map(|d| d.algebra)
}

/// Exact scalars go out as `"p/q"` strings, or `{"re", "im"}` when not real.
pub fn scalar_value(x: &GScalar) -> Value {
    if x.is_real() {
        Value::String(x.to_string())
    } else {
        let re = GScalar::real(x.re().clone());
        let im = GScalar::real(x.im().clone());
        json!({"re": re.to_string(), "im": im.to_string()})
    }
}

pub fn emit_document(doc: &AlgebraDocument) -> String {
    let a = &doc.algebra;
    let m = a.structure_matrix();
    let matrix: Vec<Value> = (0..a.dim()).map(|k| Value::Array(m.row(k).iter().map(scalar_value).collect())).collect();
    let mut obj = Map::new();
    obj.insert("dimension".into(), json!(a.dim()));
    obj.insert("matrix".into(), Value::Array(matrix));
    if let Some(labels) = a.labels() {
        obj.insert("labels".into(), json!(labels));
    }
    if !doc.metadata.is_empty() {
        obj.insert("metadata".into(), json!(doc.metadata));
    }
    serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values always serialize")
}

/// `"3,2"` is `3 e_1 + 2 e_2`.
pub fn parse_element(text: &str, n: usize) -> Result<Element, DocumentError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != n {
        return Err(field("element", format!("expected {n} comma-separated coefficients, found {}", parts.len())));
    }
    let coeffs = parts
        .iter()
        .enumerate()
        .map(|(k, p)| parse_scalar_text(&format!("element[{}]", k + 1), p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Element::new(coeffs))
}

/// One-based `"1,3,4"` to a zero-based index set.
pub fn parse_index_list(text: &str, n: usize) -> Result<IndexSet, DocumentError> {
    let mut out = IndexSet::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let k: usize = part.parse().map_err(|_| field("support", format!("{part:?} is not an index")))?;
        if k == 0 || k > n {
            return Err(field("support", format!("index {k} outside 1..={n}")));
        }
        out.insert(k - 1);
    }
    Ok(out)
}
