//! Edge-list text format and DOT export.
//!
//! Edge lists are `n m` on the first line followed by `m` lines `u v`
//! (0-based). Blank lines and lines starting with `#` are ignored.

use std::fmt::Write;

use super::{Graph, GraphError};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let [u, v] = parse_pair(line, text)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: 1,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        });
    }
    let mut out = [0usize; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("bad integer {field:?}"),
        })?;
    }
    Ok(out)
}

/// DOT with each vertex labelled by its index and degree. No layout hints.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", name.replace('"', "\\\""));
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v} [label=\"v{} (d={})\"];", v + 1, g.degree(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
