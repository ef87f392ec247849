//! Plain-text file formats.
//!
//! Hypergraph file:
//!
//! ```text
//! # optional comments
//! uniform 2
//! vertices 4
//! 1 2
//! 2 3
//! ```
//!
//! Coloring file: `modulus <m>` followed by one color per vertex, in vertex order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::power::PowerLayout;
use crate::symmetry::Coloring;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    last_line: usize,
) -> Result<(usize, u64)> {
    let (line, text) = lines.next().ok_or_else(|| parse_err(last_line, format!("missing `{keyword}` line")))?;
    let mut tokens = text.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(parse_err(line, format!("expected `{keyword} <value>`")));
    }
    let value = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(line, format!("`{keyword}` needs a non-negative integer")))?;
    if tokens.next().is_some() {
        return Err(parse_err(line, format!("trailing tokens after `{keyword}`")));
    }
    Ok((line, value))
}

fn parse_int(line: usize, token: &str) -> Result<u64> {
    token.parse().map_err(|_| parse_err(line, format!("`{token}` is not a non-negative integer")))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let last = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (uline, m) = header(&mut lines, "uniform", last)?;
    let (vline, n) = header(&mut lines, "vertices", last)?;
    let (m, n) = (m as usize, n as usize);

    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (line, text) in lines {
        let edge = text.split_whitespace().map(|t| parse_int(line, t).map(|v| v as usize)).collect::<Result<Vec<_>>>()?;
        if edge.len() != m {
            return Err(parse_err(line, format!("edge has {} vertices, expected {m}", edge.len())));
        }
        edges.push(edge);
        edge_lines.push(line);
    }

    let line_of = |edge: usize| edge_lines[edge - 1];
    Hypergraph::new(m, n, edges).map_err(|e| match e {
        Error::InvalidUniformity(_) => parse_err(uline, e.to_string()),
        Error::TooFewVertices { .. } => parse_err(vline, e.to_string()),
        Error::EdgeSize { edge, .. }
        | Error::RepeatedVertex { edge, .. }
        | Error::VertexOutOfRange { edge, .. }
        | Error::DuplicateEdge { edge, .. } => parse_err(line_of(edge), e.to_string()),
        other => other,
    })
}

/// Canonical text form: headers, then edges in canonical order.
pub fn write_hypergraph(g: &Hypergraph) -> String {
    let mut out = format!("uniform {}\nvertices {}\n", g.uniformity(), g.vertex_count());
    for e in g.edges() {
        let line: Vec<String> = e.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let last = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (mline, modulus) = header(&mut lines, "modulus", last)?;
    if modulus < 2 {
        return Err(parse_err(mline, "modulus must be at least 2"));
    }
    let mut values = Vec::new();
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        let value = parse_int(line, tokens.next().unwrap_or_default())?;
        if tokens.next().is_some() {
            return Err(parse_err(line, "expected one color per line"));
        }
        if value >= modulus {
            return Err(parse_err(line, format!("color {value} is not in [0, {}]", modulus - 1)));
        }
        values.push(value);
    }
    Coloring::new(modulus, values)
}

pub fn write_coloring(phi: &Coloring) -> String {
    let mut out = format!("modulus {}\n", phi.modulus());
    for v in phi.values() {
        let _ = writeln!(out, "{v}");
    }
    out
}

/// Block listing for a power hypergraph.
pub fn write_layout(layout: &PowerLayout, base: &Hypergraph) -> String {
    let mut out = String::from("# generalized power layout\n");
    let _ = writeln!(out, "t {}\ns {}\nm {}", layout.base_uniformity, layout.s, layout.m);
    let join = |b: &[usize]| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    for (v, block) in layout.vertex_blocks.iter().enumerate() {
        let _ = writeln!(out, "vertex {}: {}", v + 1, join(block));
    }
    if layout.edge_blocks.iter().any(|b| !b.is_empty()) {
        for (e, block) in base.edges().iter().zip(&layout.edge_blocks) {
            let _ = writeln!(out, "edge {}: {}", join(e), join(block));
        }
    }
    out
}
