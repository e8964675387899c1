//! DIMACS `.col` reading and writing (1-based on disk, 0-based in memory).

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses `p edge n m` / `e u v` text. `c` lines and blank lines are skipped;
/// `p col` is accepted as a header synonym. The edge count in the header is
/// informational (duplicate edge lines are common in the wild).
pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(err("duplicate `p` header".into()));
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(err(format!(
                            "expected `p edge n m`, found format `{}`",
                            other.unwrap_or("")
                        )))
                    }
                }
                let n = parse_count(tokens.next(), "vertex count", line_no)?;
                parse_count(tokens.next(), "edge count", line_no)?;
                if let Some(extra) = tokens.next() {
                    return Err(err(format!("unexpected token `{extra}` in header")));
                }
                graph = Some(Graph::empty(n).map_err(|e| err(e.to_string()))?);
            }
            Some("e") => {
                let n = match &graph {
                    Some(g) => g.n(),
                    None => return Err(err("edge line before `p edge` header".into())),
                };
                let mut endpoint = || -> Result<usize> {
                    let tok = tokens
                        .next()
                        .ok_or_else(|| err("edge line needs two endpoints".into()))?;
                    let v: usize = tok
                        .parse()
                        .map_err(|_| err(format!("bad vertex index `{tok}`")))?;
                    if v == 0 || v > n {
                        return Err(err(format!("vertex index {v} out of range 1..={n}")));
                    }
                    Ok(v - 1)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if u == v {
                    return Err(err(format!("self-loop at vertex {}", u + 1)));
                }
                if let Some(extra) = tokens.next() {
                    return Err(err(format!("unexpected token `{extra}` on edge line")));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let g = graph.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `p edge n m` header".into(),
    })?;
    Graph::new(g.n(), edges)
}

fn parse_count(tok: Option<&str>, what: &str, line: usize) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        message: format!("header is missing the {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {what} `{tok}`"),
    })
}

/// Emits the header and one `e u v` line per edge with `u < v`, sorted.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
