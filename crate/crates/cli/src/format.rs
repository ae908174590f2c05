//! Text formats: graphs as `n m` followed by `m` lines `u v` (0-based,
//! `#` starts a comment), orderings as one line of ids, colorings as JSON.

use std::fmt::Write;

use oddcolor_core::{build_graph, Coloring, Graph};
use serde::Deserialize;

use crate::CliError;

/// Parsed graph and whether the edge list repeated an edge.
pub fn parse_graph(text: &str) -> Result<(Graph, bool), CliError> {
    let mut nums = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split_whitespace() {
            let x: usize = tok
                .parse()
                .map_err(|_| CliError::Format(format!("line {}: expected a non-negative integer, got {tok:?}", lineno + 1)))?;
            nums.push(x);
        }
    }
    let (&n, &m) = match nums.as_slice() {
        [n, m, ..] => (n, m),
        _ => return Err(CliError::Format("missing header line \"n m\"".into())),
    };
    let body = &nums[2..];
    if body.len() != 2 * m {
        return Err(CliError::Format(format!("header declares {m} edges, found {} ids ({} expected)", body.len(), 2 * m)));
    }
    let edges: Vec<(usize, usize)> = body.chunks(2).map(|p| (p[0], p[1])).collect();
    let built = build_graph(n, &edges).map_err(|e| CliError::Format(e.to_string()))?;
    let dup = built.had_duplicates();
    Ok((built.graph, dup))
}

pub fn write_graph(g: &Graph, out: &mut String) {
    let _ = writeln!(out, "{} {}", g.order(), g.edge_count());
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
}

pub fn ordering_line(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// The coloring fields of a `color` result; other fields are ignored.
#[derive(Deserialize)]
struct ColoringFile {
    colors: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ColoringInput {
    File(ColoringFile),
    Bare(Vec<u32>),
}

pub fn parse_coloring(text: &str) -> Result<Coloring, CliError> {
    let parsed: ColoringInput =
        serde_json::from_str(text).map_err(|e| CliError::Format(format!("coloring: {e}")))?;
    let colors = match parsed {
        ColoringInput::File(f) => f.colors,
        ColoringInput::Bare(c) => c,
    };
    Coloring::from_colors(colors).map_err(|e| CliError::Format(format!("coloring: {e}")))
}
