//! Text and JSON encodings of hypergraphs and clutters.
//!
//! Text: a first line `n <count>`, then one `e <v1> <v2> ...` line per edge
//! with 1-based labels. Lines starting with `#` and blank lines are ignored.
//!
//! JSON: `{"vertices": <count>, "edges": [[1, 2], [2, 3]]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::hypergraph::{checked_set, Hypergraph};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
}

impl EdgeListJson {
    pub fn new(n: usize, edges: &[VertexSet]) -> Self {
        EdgeListJson {
            vertices: n,
            edges: edges.iter().map(|e| e.to_vec()).collect(),
        }
    }

    fn into_raw(self) -> Result<(usize, Vec<VertexSet>)> {
        let n = self.vertices;
        if n > MAX_VERTICES {
            return Err(Error::GroundSetTooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let edges = self
            .edges
            .into_iter()
            .map(|e| checked_set(n, e))
            .collect::<Result<Vec<_>>>()?;
        Ok((n, edges))
    }
}

/// Ground-set size and raw edge list from either encoding.
pub fn parse_raw(input: &str) -> Result<(usize, Vec<VertexSet>)> {
    if input.trim_start().starts_with('{') {
        let json: EdgeListJson = serde_json::from_str(input).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        return json.into_raw();
    }
    parse_text_raw(input)
}

fn parse_text_raw(input: &str) -> Result<(usize, Vec<VertexSet>)> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match (tag, n) {
            ("n", None) => {
                let value = tokens
                    .next()
                    .ok_or_else(|| err("missing vertex count".into()))?;
                let count: usize = value
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{value}`")))?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens after vertex count".into()));
                }
                if count > MAX_VERTICES {
                    return Err(Error::GroundSetTooLarge {
                        n: count,
                        max: MAX_VERTICES,
                    });
                }
                n = Some(count);
            }
            ("n", Some(_)) => return Err(err("duplicate `n` line".into())),
            ("e", Some(count)) => {
                let mut vertices = Vec::new();
                for t in tokens {
                    let v: usize = t.parse().map_err(|_| err(format!("bad vertex `{t}`")))?;
                    vertices.push(v);
                }
                edges.push(checked_set(count, vertices)?);
            }
            ("e", None) => return Err(err("edge before the `n` line".into())),
            (other, _) => return Err(err(format!("unknown line tag `{other}`"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        message: "missing `n` line".into(),
    })?;
    Ok((n, edges))
}

pub fn parse_hypergraph(input: &str) -> Result<Hypergraph> {
    let (n, edges) = parse_raw(input)?;
    Hypergraph::new(n, edges)
}

pub fn parse_clutter(input: &str) -> Result<Clutter> {
    let (n, members) = parse_raw(input)?;
    Clutter::new(n, members)
}

pub fn to_text(n: usize, edges: &[VertexSet]) -> String {
    let mut out = format!("n {n}\n");
    for e in edges {
        out.push('e');
        for v in e.iter() {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn hypergraph_to_text(h: &Hypergraph) -> String {
    to_text(h.n(), h.edges())
}

pub fn clutter_to_text(c: &Clutter) -> String {
    to_text(c.n(), c.members())
}

pub fn to_json(n: usize, edges: &[VertexSet]) -> String {
    serde_json::to_string(&EdgeListJson::new(n, edges)).expect("plain data serializes")
}

/// Comma-separated 1-based labels, as used on the command line.
pub fn parse_vertex_list(s: &str, n: usize) -> Result<VertexSet> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    let mut vertices = Vec::new();
    for t in s.split(',') {
        let t = t.trim();
        let v: usize = t.parse().map_err(|_| Error::Parse {
            line: 0,
            message: format!("bad vertex `{t}` in list `{s}`"),
        })?;
        vertices.push(v);
    }
    checked_set(n, vertices)
}
