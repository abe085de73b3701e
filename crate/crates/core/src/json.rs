//! JSON file formats.
//!
//! - graph: `{"p": 4, "edges": [[1, 2], [2, 3]]}`, vertices 1-based;
//! - matrix: `{"p": 2, "entries": [["1", "-1/2"], ["-1/2", "1"]]}`;
//! - inequality: `{"alpha": {"1-2": "1", "2-3": "-1"}, "b": "1"}`, edges
//!   omitted from `alpha` have coefficient zero;
//! - cut: `{"U": [2, 3]}`.
//!
//! Rationals are written as strings `"a/b"` (or `"a"`); integers are also
//! accepted on input.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::cutpoly::{CutVector, LinIneq};
use crate::exact::{format_rat, parse_rat, Rat, SymMat};
use crate::extremal::ExtremalCertificate;
use crate::graph::{Cut, Edge, Graph};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    p: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CutDoc {
    #[serde(rename = "U")]
    u: Vec<usize>,
}

fn parse_doc<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn rat_value(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn value_rat(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rat(&n.to_string()),
        other => Err(Error::Parse(format!("{other} is not a rational"))),
    }
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphDoc = parse_doc(text, "graph")?;
    Graph::new(doc.p, doc.edges.into_iter().map(|[a, b]| (a, b)))
}

pub fn graph_to_json(g: &Graph) -> Value {
    let doc = GraphDoc {
        p: g.order(),
        edges: g.edges().iter().map(|e| [e.lo(), e.hi()]).collect(),
    };
    serde_json::to_value(doc).expect("plain data")
}

pub fn matrix_from_json(text: &str) -> Result<SymMat> {
    let v: Value = parse_doc(text, "matrix")?;
    matrix_from_value(&v)
}

pub fn matrix_from_value(v: &Value) -> Result<SymMat> {
    let bad = |msg: &str| Error::Parse(format!("matrix: {msg}"));
    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
    let p = obj
        .get("p")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing integer \"p\""))? as usize;
    let rows = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing array \"entries\""))?;
    if rows.len() != p {
        return Err(bad(&format!("{} rows for p = {p}", rows.len())));
    }
    let rows = rows
        .iter()
        .map(|row| {
            let row = row.as_array().ok_or_else(|| bad("row is not an array"))?;
            if row.len() != p {
                return Err(bad(&format!("row of length {} for p = {p}", row.len())));
            }
            row.iter().map(value_rat).collect()
        })
        .collect::<Result<Vec<Vec<Rat>>>>()?;
    SymMat::from_rows(rows)
}

pub fn matrix_to_json(m: &SymMat) -> Value {
    let entries: Vec<Value> = (0..m.dim())
        .map(|i| Value::Array(m.row(i).iter().map(rat_value).collect()))
        .collect();
    json!({ "p": m.dim(), "entries": entries })
}

/// Reads an inequality on the edges of `g`.
pub fn ineq_from_json(text: &str, g: &Graph) -> Result<LinIneq> {
    let v: Value = parse_doc(text, "inequality")?;
    let bad = |msg: &str| Error::Parse(format!("inequality: {msg}"));
    let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
    let alpha = obj
        .get("alpha")
        .and_then(Value::as_object)
        .ok_or_else(|| bad("missing object \"alpha\""))?;
    let b = value_rat(obj.get("b").ok_or_else(|| bad("missing \"b\""))?)?;
    let mut coefs = Vec::with_capacity(alpha.len());
    for (key, val) in alpha {
        coefs.push((Edge::parse_key(key)?, value_rat(val)?));
    }
    LinIneq::from_edges(g, coefs, b)
}

/// Nonzero coefficients only, in edge-index order.
pub fn ineq_to_json(q: &LinIneq, g: &Graph) -> Value {
    let mut alpha = Map::new();
    for (e, a) in g.edges().iter().zip(q.alpha()) {
        if !num_traits::Zero::is_zero(a) {
            alpha.insert(e.key(), rat_value(a));
        }
    }
    json!({ "alpha": alpha, "b": rat_value(q.rhs()) })
}

pub fn cut_from_json(text: &str, p: usize) -> Result<Cut> {
    let doc: CutDoc = parse_doc(text, "cut")?;
    Cut::new(p, doc.u)
}

pub fn cut_to_json(u: &Cut) -> Value {
    serde_json::to_value(CutDoc {
        u: u.members().collect(),
    })
    .expect("plain data")
}

/// `{"U": [...], "x": [±1, ...]}` with `x` in edge-index order.
pub fn cut_vector_to_json(x: &CutVector) -> Value {
    json!({ "U": x.cut.members().collect::<Vec<_>>(), "x": x.signs })
}

pub fn vector_to_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(rat_value).collect())
}

pub fn certificate_to_json(c: &ExtremalCertificate, g: &Graph) -> Value {
    let mut out = Map::new();
    if let Some(f) = &c.facet {
        out.insert("facet".into(), ineq_to_json(f, g));
    }
    out.insert("sign".into(), json!(c.sign));
    out.insert("matrix".into(), matrix_to_json(&c.matrix));
    out.insert("rank".into(), json!(c.rank));
    out.insert("frame_rank".into(), json!(c.frame_rank));
    out.insert("target".into(), json!(c.target));
    out.insert("extremal".into(), json!(c.extremal));
    Value::Object(out)
}
