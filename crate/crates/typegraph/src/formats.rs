//! DIMACS and JSON encodings of graphs, colourings and reports.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use typegraph_core::colorings::ProperReport;
use typegraph_core::realizations::Rational;
use typegraph_core::{Coloring, GbVertex, Graph, GraphKind, HomReport, RationalSet};

use crate::error::{CliError, Result};

/// Kind tag and parameters of a graph, e.g. `("typegraph", {"n": 4, "type": "132"})`.
pub fn kind_params(kind: &GraphKind) -> (&'static str, Value) {
    match kind {
        GraphKind::TypeGraph { n, tau } => ("typegraph", json!({ "n": n, "type": tau.to_string() })),
        GraphKind::Auxiliary { b, n } => ("gb", json!({ "b": b, "n": n })),
        GraphKind::Custom => ("custom", json!({})),
    }
}

/// DIMACS `.col` text: a `c` comment naming the kind and parameters, the
/// `p edge V E` header, then one `e u v` line per edge with 1-based indices.
pub fn write_dimacs<V, W: Write>(g: &Graph<V>, mut w: W) -> std::io::Result<()> {
    writeln!(w, "c {}", g.kind())?;
    writeln!(w, "p edge {} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

/// Reads DIMACS `.col` text into a graph on `0..V`.
pub fn read_dimacs<R: BufRead>(r: R) -> Result<Graph<usize>> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let bad = |message: &str| CliError::Parse { line: lineno, message: message.to_owned() };
        let mut parts = line.split_whitespace();
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(bad("second problem line"));
                }
                if parts.next() != Some("edge") {
                    return Err(bad("expected `p edge V E`"));
                }
                let mut num = || parts.next().and_then(|s| s.parse::<usize>().ok()).ok_or_else(|| bad("bad count"));
                header = Some((num()?, num()?));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| bad("edge before problem line"))?;
                let mut end = || {
                    parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .filter(|&v| (1..=n).contains(&v))
                        .ok_or_else(|| bad("bad edge endpoint"))
                };
                let (u, v) = (end()?, end()?);
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(bad(&format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(CliError::Parse { line: 0, message: "missing problem line".into() })?;
    let g = Graph::from_edge_list(n, &edges)?;
    if g.edge_count() != m {
        return Err(CliError::Parse { line: 0, message: format!("header says {m} edges, found {}", g.edge_count()) });
    }
    Ok(g)
}

/// Vertex payloads that serialise as integer arrays.
pub trait Coordinates {
    fn coordinates(&self) -> Vec<u64>;
}

impl Coordinates for Vec<u64> {
    fn coordinates(&self) -> Vec<u64> {
        self.clone()
    }
}

impl Coordinates for GbVertex {
    fn coordinates(&self) -> Vec<u64> {
        self.coords().to_vec()
    }
}

impl Coordinates for usize {
    fn coordinates(&self) -> Vec<u64> {
        vec![*self as u64]
    }
}

/// `{kind, params, vertices, edges}` with 0-based edge endpoints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDump {
    pub kind: String,
    pub params: Value,
    pub vertices: Vec<Vec<u64>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDump {
    pub fn new<V: Coordinates>(g: &Graph<V>) -> Self {
        let (kind, params) = kind_params(g.kind());
        GraphDump {
            kind: kind.to_owned(),
            params,
            vertices: g.vertices().iter().map(Coordinates::coordinates).collect(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// `{params, colors, palette_size, token_legend}` plus the properness check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoringDump {
    pub params: Value,
    pub colors: Vec<usize>,
    pub palette_size: usize,
    pub token_legend: Vec<String>,
    pub proper: bool,
    pub violations: Vec<[usize; 2]>,
}

impl ColoringDump {
    pub fn new(kind: &GraphKind, c: &Coloring, report: &ProperReport) -> Self {
        let (tag, mut params) = kind_params(kind);
        params["kind"] = json!(tag);
        ColoringDump {
            params,
            colors: c.colors().to_vec(),
            palette_size: c.palette_size(),
            token_legend: c.legend().iter().map(ToString::to_string).collect(),
            proper: report.is_proper(),
            violations: report.violations.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// `{violations, collisions, edges_checked}` with violating source edges as
/// pairs of vertex payloads.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomReportDump {
    pub source: String,
    pub target: String,
    pub violations: Vec<[Vec<u64>; 2]>,
    pub collisions: usize,
    pub edges_checked: usize,
}

impl HomReportDump {
    pub fn new<V: Coordinates>(src: &Graph<V>, target: &GraphKind, report: &HomReport) -> Self {
        let vs = src.vertices();
        HomReportDump {
            source: src.kind().to_string(),
            target: target.to_string(),
            violations: report
                .violations
                .iter()
                .map(|&(u, v)| [vs[u].coordinates(), vs[v].coordinates()])
                .collect(),
            collisions: report.collisions,
            edges_checked: report.edges_checked,
        }
    }
}

/// `{chi, colors, nodes_explored, elapsed_ms}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiDump {
    pub chi: usize,
    pub colors: Vec<usize>,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
}

/// Rational sets as arrays of `"p/q"` strings (`"p"` when integral).
pub fn rational_set_to_json(s: &RationalSet) -> Value {
    Value::Array(s.elements().iter().map(|r| Value::String(r.to_string())).collect())
}

pub fn rational_set_from_json(v: &Value) -> Result<RationalSet> {
    let items = v.as_array().ok_or_else(|| CliError::Usage("expected an array of rationals".into()))?;
    let elements = items
        .iter()
        .map(|item| {
            item.as_str()
                .and_then(|s| s.parse::<Rational>().ok())
                .ok_or_else(|| CliError::Usage(format!("bad rational {item}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalSet::new(elements)?)
}
