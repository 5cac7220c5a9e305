//! JSON documents describing an algebra together with named operators,
//! linear maps, bilinear forms, symmetric tensors and representations.
//!
//! ```json
//! {
//!   "kind": "prelie",
//!   "dim": 2,
//!   "basis": ["e1", "e2"],
//!   "product": [[["0","0"],["0","0"]], [["-1","0"],["0","1"]]],
//!   "operators": { "N": [["1","1"],["0","1"]] },
//!   "maps": { "T": [["1","0","2"],["0","1","0"]] },
//!   "forms": { "B": { "matrix": [["0","1"],["1","0"]], "symmetry": "symmetric" } },
//!   "tensors": { "r": [["0","1"],["1","0"]] },
//!   "representations": { "V": { "dimV": 1, "rho": [[["0"]],[["1"]]], "mu": [[["0"]],[["0"]]] } },
//!   "origin": "free text"
//! }
//! ```
//!
//! `product[i][j]` holds the coordinates of `e_i · e_j`. Matrices are lists
//! of rows and act on column vectors, so column `j` is the image of `e_j`.
//! A form matrix `M` means `B(x, y) = x^T M y`; a tensor matrix is `r♯` in
//! the dual basis. Entries are integers or strings `"p"` / `"p/q"`.
//! `kind` is one of `prelie`, `lie`, `associative`, `unchecked`.
//!
//! Serialization is canonical: keys sorted, every entry a reduced string
//! `"p/q"` with `q > 0` (or `"p"` when `q = 1`), two-space indentation and a
//! trailing newline.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, Kind, Representation};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::smatrix::{BilinearForm, Symmetry};
use crate::tensor::MultiMap;

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub algebra: Algebra,
    /// Square matrices on the algebra.
    pub operators: BTreeMap<String, Matrix>,
    /// Rectangular maps `V → g`, `dim g` rows.
    pub maps: BTreeMap<String, Matrix>,
    pub forms: BTreeMap<String, BilinearForm>,
    pub tensors: BTreeMap<String, Matrix>,
    pub representations: BTreeMap<String, Representation>,
    pub origin: Option<String>,
}

impl Document {
    pub fn new(algebra: Algebra) -> Self {
        Document {
            algebra,
            operators: BTreeMap::new(),
            maps: BTreeMap::new(),
            forms: BTreeMap::new(),
            tensors: BTreeMap::new(),
            representations: BTreeMap::new(),
            origin: None,
        }
    }

    pub fn with_operator(mut self, name: &str, m: Matrix) -> Self {
        self.operators.insert(name.to_string(), m);
        self
    }

    pub fn with_map(mut self, name: &str, m: Matrix) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    pub fn with_form(mut self, name: &str, f: BilinearForm) -> Self {
        self.forms.insert(name.to_string(), f);
        self
    }

    pub fn with_tensor(mut self, name: &str, m: Matrix) -> Self {
        self.tensors.insert(name.to_string(), m);
        self
    }

    pub fn with_representation(mut self, name: &str, r: Representation) -> Self {
        self.representations.insert(name.to_string(), r);
        self
    }

    pub fn with_origin(mut self, origin: &str) -> Self {
        self.origin = Some(origin.to_string());
        self
    }

    pub fn operator(&self, name: &str) -> Result<&Matrix> {
        lookup(&self.operators, name, "operator")
    }

    pub fn map(&self, name: &str) -> Result<&Matrix> {
        self.maps
            .get(name)
            .or_else(|| self.operators.get(name))
            .ok_or_else(|| Error::Parse(format!("no map or operator named '{name}'")))
    }

    pub fn form(&self, name: &str) -> Result<&BilinearForm> {
        lookup(&self.forms, name, "form")
    }

    pub fn tensor(&self, name: &str) -> Result<&Matrix> {
        lookup(&self.tensors, name, "tensor")
    }

    pub fn representation(&self, name: &str) -> Result<&Representation> {
        lookup(&self.representations, name, "representation")
    }
}

fn lookup<'a, T>(m: &'a BTreeMap<String, T>, name: &str, what: &str) -> Result<&'a T> {
    m.get(name).ok_or_else(|| Error::Parse(format!("no {what} named '{name}'")))
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::PreLie => "prelie",
        Kind::Lie => "lie",
        Kind::Associative => "associative",
        Kind::Unchecked => "unchecked",
    }
}

fn parse_kind(s: &str) -> Option<Kind> {
    match s {
        "prelie" => Some(Kind::PreLie),
        "lie" => Some(Kind::Lie),
        "associative" => Some(Kind::Associative),
        "unchecked" => Some(Kind::Unchecked),
        _ => None,
    }
}

fn at(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("at {path}: {msg}"))
}

fn scalar(v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Scalar::from_integer(i.into())),
            None => Err(at(path, format!("{n} is not an integer; write rationals as \"p/q\""))),
        },
        Value::String(s) => parse_scalar(s).ok_or_else(|| at(path, format!("'{s}' is not a rational number"))),
        other => Err(at(path, format!("expected a number, found {other}"))),
    }
}

fn array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a Vec<Value>> {
    let a = v.as_array().ok_or_else(|| at(path, "expected an array"))?;
    if let Some(l) = len {
        if a.len() != l {
            return Err(at(path, format!("expected {l} entries, found {}", a.len())));
        }
    }
    Ok(a)
}

fn vector(v: &Value, path: &str, len: usize) -> Result<Vec<Scalar>> {
    array(v, path, Some(len))?
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(x, &format!("{path}[{i}]")))
        .collect()
}

fn matrix(v: &Value, path: &str, rows: Option<usize>, cols: Option<usize>) -> Result<Matrix> {
    let r = array(v, path, rows)?;
    if r.is_empty() {
        return Err(at(path, "matrix has no rows"));
    }
    let width = match cols {
        Some(c) => c,
        None => array(&r[0], &format!("{path}[0]"), None)?.len(),
    };
    let data: Vec<Vec<Scalar>> = r
        .iter()
        .enumerate()
        .map(|(i, row)| vector(row, &format!("{path}[{i}]"), width))
        .collect::<Result<_>>()?;
    Matrix::from_rows(data).map_err(|e| at(path, e))
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| at(path, "expected an object"))
}

fn section<'a>(root: &'a Map<String, Value>, key: &str) -> Result<Vec<(&'a String, &'a Value)>> {
    match root.get(key) {
        None | Some(Value::Null) => Ok(Vec::new()),
        Some(v) => Ok(object(v, key)?.iter().collect()),
    }
}

const KEYS: [&str; 10] = [
    "kind",
    "dim",
    "basis",
    "product",
    "operators",
    "maps",
    "forms",
    "tensors",
    "representations",
    "origin",
];

/// Parses a document. Syntax errors carry line and column; shape and value
/// errors carry the JSON path of the offending entry.
pub fn parse_document(text: &str) -> Result<Document> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| {
            let msg = e.to_string();
            let msg = msg.rsplit_once(" at line ").map_or(msg.as_str(), |(m, _)| m);
            Error::Parse(format!("line {}, column {}: {msg}", e.line(), e.column()))
        })?;
    let root = object(&root, "top level")?;
    if let Some(k) = root.keys().find(|k| !KEYS.contains(&k.as_str())) {
        return Err(at("top level", format!("unknown field '{k}'")));
    }
    let kind_text = root.get("kind").and_then(Value::as_str).ok_or_else(|| at("kind", "missing or not a string"))?;
    let kind = parse_kind(kind_text).ok_or_else(|| at("kind", format!("unknown kind '{kind_text}'")))?;
    let n = root
        .get("dim")
        .and_then(Value::as_u64)
        .filter(|&d| d > 0)
        .ok_or_else(|| at("dim", "missing or not a positive integer"))? as usize;
    let product = root.get("product").ok_or_else(|| at("product", "missing"))?;
    let rows = array(product, "product", Some(n))?;
    let mut table = MultiMap::zero(n, n, 1);
    for (i, row) in rows.iter().enumerate() {
        let cells = array(row, &format!("product[{i}]"), Some(n))?;
        for (j, cell) in cells.iter().enumerate() {
            let v = vector(cell, &format!("product[{i}][{j}]"), n)?;
            table.value_mut(&[i, j]).clone_from_slice(&v);
        }
    }
    let mut algebra = Algebra::new(kind, table)?;
    if let Some(b) = root.get("basis") {
        let names = array(b, "basis", Some(n))?
            .iter()
            .enumerate()
            .map(|(i, s)| s.as_str().map(str::to_string).ok_or_else(|| at(&format!("basis[{i}]"), "expected a string")))
            .collect::<Result<Vec<_>>>()?;
        algebra = algebra.with_labels(names);
    }
    let mut doc = Document::new(algebra);
    for (name, v) in section(root, "operators")? {
        doc.operators.insert(name.clone(), matrix(v, &format!("operators.{name}"), Some(n), Some(n))?);
    }
    for (name, v) in section(root, "maps")? {
        doc.maps.insert(name.clone(), matrix(v, &format!("maps.{name}"), Some(n), None)?);
    }
    for (name, v) in section(root, "forms")? {
        let path = format!("forms.{name}");
        let o = object(v, &path)?;
        let m = matrix(o.get("matrix").ok_or_else(|| at(&path, "missing matrix"))?, &format!("{path}.matrix"), Some(n), Some(n))?;
        let symmetry = match o.get("symmetry").and_then(Value::as_str) {
            Some("symmetric") => Symmetry::Symmetric,
            Some("skew") => Symmetry::Skew,
            _ => return Err(at(&format!("{path}.symmetry"), "expected \"symmetric\" or \"skew\"")),
        };
        let f = BilinearForm::new(m, symmetry).map_err(|e| at(&path, e))?;
        doc.forms.insert(name.clone(), f);
    }
    for (name, v) in section(root, "tensors")? {
        let path = format!("tensors.{name}");
        let m = matrix(v, &path, Some(n), Some(n))?;
        if !m.is_symmetric() {
            return Err(at(&path, "tensor must be symmetric"));
        }
        doc.tensors.insert(name.clone(), m);
    }
    for (name, v) in section(root, "representations")? {
        let path = format!("representations.{name}");
        let o = object(v, &path)?;
        let m = o
            .get("dimV")
            .and_then(Value::as_u64)
            .filter(|&d| d > 0)
            .ok_or_else(|| at(&format!("{path}.dimV"), "missing or not a positive integer"))? as usize;
        let family = |key: &str| -> Result<Vec<Matrix>> {
            let p = format!("{path}.{key}");
            array(o.get(key).ok_or_else(|| at(&p, "missing"))?, &p, Some(n))?
                .iter()
                .enumerate()
                .map(|(i, x)| matrix(x, &format!("{p}[{i}]"), Some(m), Some(m)))
                .collect()
        };
        let rep = Representation::new(m, family("rho")?, family("mu")?).map_err(|e| at(&path, e))?;
        doc.representations.insert(name.clone(), rep);
    }
    if let Some(o) = root.get("origin") {
        doc.origin = Some(o.as_str().ok_or_else(|| at("origin", "expected a string"))?.to_string());
    }
    Ok(doc)
}

fn scalar_value(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| Value::Array(r.iter().map(scalar_value).collect())).collect())
}

fn named<T>(m: &BTreeMap<String, T>, f: impl Fn(&T) -> Value) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.clone(), f(v))).collect())
}

/// Canonical JSON text of a document.
pub fn serialize_document(doc: &Document) -> String {
    let a = &doc.algebra;
    let n = a.dim();
    let product: Vec<Value> = (0..n)
        .map(|i| {
            Value::Array(
                (0..n)
                    .map(|j| Value::Array(a.mul_basis(i, j).iter().map(scalar_value).collect()))
                    .collect(),
            )
        })
        .collect();
    let mut root = Map::new();
    root.insert("kind".into(), json!(kind_name(a.kind())));
    root.insert("dim".into(), json!(n));
    if let Some(labels) = a.labels() {
        root.insert("basis".into(), json!(labels));
    }
    root.insert("product".into(), Value::Array(product));
    root.insert("operators".into(), named(&doc.operators, matrix_value));
    if !doc.maps.is_empty() {
        root.insert("maps".into(), named(&doc.maps, matrix_value));
    }
    root.insert(
        "forms".into(),
        named(&doc.forms, |f| json!({"matrix": matrix_value(f.matrix()), "symmetry": f.symmetry().as_str()})),
    );
    root.insert("tensors".into(), named(&doc.tensors, matrix_value));
    root.insert(
        "representations".into(),
        named(&doc.representations, |r| {
            json!({
                "dimV": r.dim_v(),
                "rho": r.rho_basis().iter().map(matrix_value).collect::<Vec<_>>(),
                "mu": r.mu_basis().iter().map(matrix_value).collect::<Vec<_>>(),
            })
        }),
    );
    if let Some(o) = &doc.origin {
        root.insert("origin".into(), json!(o));
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("JSON values serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    const A2: &str = r#"{
        "kind": "prelie", "dim": 2,
        "product": [[[0,0],[0,0]], [[-1,0],[0,1]]],
        "operators": {"N": [[1, "2/4"], [0, 1]]},
        "forms": {"B": {"matrix": [[0,1],[1,0]], "symmetry": "symmetric"}},
        "tensors": {}, "representations": {}
    }"#;

    #[test]
    fn parses_products_and_normalizes() {
        let d = parse_document(A2).unwrap();
        assert_eq!(d.algebra.mul_basis(1, 0), &[int(-1), int(0)]);
        assert_eq!(d.algebra.mul_basis(1, 1), &[int(0), int(1)]);
        assert_eq!(d.operator("N").unwrap().row(0)[1], frac(1, 2));
        let text = serialize_document(&d);
        assert!(text.contains("\"1/2\""));
        let again = parse_document(&text).unwrap();
        assert_eq!(again, d);
        assert_eq!(serialize_document(&again), text);
    }

    #[test]
    fn empty_sections_are_valid() {
        let d = parse_document(r#"{"kind":"lie","dim":1,"product":[[[0]]]}"#).unwrap();
        assert!(d.operators.is_empty() && d.forms.is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_document("{\n  \"kind\": \"prelie\",\n  \"dim\": 2,,\n}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        let bad_shape = A2.replace("[[1, \"2/4\"], [0, 1]]", "[[1, 2, 3], [0, 1]]");
        let e = parse_document(&bad_shape).unwrap_err();
        assert!(e.to_string().contains("operators.N[0]"), "{e}");
        let e = parse_document(&A2.replace("\"2/4\"", "0.5")).unwrap_err();
        assert!(e.to_string().contains("operators.N[0][1]"), "{e}");
        let e = parse_document(&A2.replace("\"2/4\"", "\"x\"")).unwrap_err();
        assert!(matches!(e, Error::Parse(_)));
        let e = parse_document(&A2.replace("\"symmetric\"", "\"skew\"")).unwrap_err();
        assert!(e.to_string().contains("forms.B"), "{e}");
    }
}
