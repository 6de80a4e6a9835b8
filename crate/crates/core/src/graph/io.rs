//! Plain-text graph format.
//!
//! ```text
//! # optional comment lines
//! p <n>
//! e <u> <v>      (1 <= u < v <= n)
//! ```
//!
//! A file may hold several graphs; each `p` line starts a new one. The
//! writer emits edges in lexicographic order and no comments.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {}", g.vertex_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses a file holding exactly one graph.
pub fn read_graph(text: &str) -> Result<Graph> {
    let mut gs = parse_graphs(text)?;
    match gs.len() {
        1 => Ok(gs.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 0,
            msg: "no `p` header".into(),
        }),
        k => Err(Error::Parse {
            line: 0,
            msg: format!("expected one graph, found {k}"),
        }),
    }
}

pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut current: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("p") => {
                let n = parse_field(fields.next(), line)?;
                if fields.next().is_some() {
                    return Err(err("trailing fields after `p <n>`".into()));
                }
                if let Some(g) = current.replace(Graph::new(n)) {
                    out.push(g);
                }
            }
            Some("e") => {
                let g = current
                    .as_mut()
                    .ok_or_else(|| err("edge before `p` header".into()))?;
                let u = parse_field(fields.next(), line)?;
                let v = parse_field(fields.next(), line)?;
                if fields.next().is_some() {
                    return Err(err("trailing fields after `e <u> <v>`".into()));
                }
                let n = g.vertex_count();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(format!("vertex out of range 1..={n}")));
                }
                if u >= v {
                    return Err(err(format!("edge `e {u} {v}` must have u < v")));
                }
                if g.has_edge(u - 1, v - 1) {
                    return Err(err(format!("duplicate edge {u} {v}")));
                }
                g.connect(u - 1, v - 1);
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
    }
    out.extend(current);
    Ok(out)
}

fn parse_field(field: Option<&str>, line: usize) -> Result<usize> {
    let f = field.ok_or_else(|| Error::Parse {
        line,
        msg: "missing field".into(),
    })?;
    f.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not a non-negative integer: `{f}`"),
    })
}
