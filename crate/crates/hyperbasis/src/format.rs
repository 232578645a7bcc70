//! Text and JSON formats.
//!
//! Hypergraph text format:
//!
//! ```text
//! # comment
//! p hg <n> <m>
//! e <v1> <v2> ...
//! ```
//!
//! Vertex indices are 0-based and written in ascending order. Repeated edge
//! lines are merged with a warning. A single-line form joins the lines with
//! `"; "`, e.g. `p hg 3 1; e 0 1 2`.

use std::fmt;

use hyperbasis_core::algorithms::BipartiteCNInstance;
use hyperbasis_core::basis::MotifParameter;
use hyperbasis_core::invariants::TreeDecomposition;
use hyperbasis_core::{Hypergraph, Rational, VertexSet};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A parse failure with its 1-based line number (0 when not tied to a line).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// Parsed value plus non-fatal warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

/// Non-empty, non-comment lines with their 1-based numbers.
fn content_lines<'a>(lines: impl Iterator<Item = &'a str>) -> impl Iterator<Item = (usize, Vec<&'a str>)> {
    lines
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn number(line: usize, token: &str, what: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError { line, message: format!("expected {what}, found {token:?}") })
}

fn parse_hg_lines<'a>(lines: impl Iterator<Item = &'a str>) -> Result<Parsed<Hypergraph>, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<VertexSet> = Vec::new();
    let mut warnings = Vec::new();
    let mut edge_lines = 0;
    for (line, tokens) in content_lines(lines) {
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return err(line, "second header line");
                }
                if tokens.len() != 4 || tokens[1] != "hg" {
                    return err(line, "malformed header, expected \"p hg <n> <m>\"");
                }
                let n = number(line, tokens[2], "vertex count")?;
                if n > hyperbasis_core::MAX_VERTICES {
                    return err(line, format!("{n} vertices exceed the 64-vertex capacity"));
                }
                header = Some((n, number(line, tokens[3], "edge count")?));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return err(line, "edge line before the \"p hg\" header");
                };
                if tokens.len() == 1 {
                    return err(line, "empty edge");
                }
                let mut edge = VertexSet::EMPTY;
                for t in &tokens[1..] {
                    let v = number(line, t, "vertex index")?;
                    if v >= n {
                        return err(line, format!("vertex index out of range: {v} (vertex count {n})"));
                    }
                    if edge.contains(v) {
                        return err(line, format!("vertex {v} repeated within an edge"));
                    }
                    edge = edge.with(v);
                }
                edge_lines += 1;
                if edges.contains(&edge) {
                    warnings.push(format!("line {line}: duplicate edge merged"));
                } else {
                    edges.push(edge);
                }
            }
            other => return err(line, format!("unknown line type {other:?}")),
        }
    }
    let Some((n, m)) = header else {
        return err(0, "missing \"p hg <n> <m>\" header");
    };
    if m != edge_lines {
        return err(0, format!("header announces {m} edges, found {edge_lines} edge lines"));
    }
    let h = Hypergraph::new(n, edges).map_err(|e| FormatError { line: 0, message: e.to_string() })?;
    Ok(Parsed { value: h, warnings })
}

pub fn parse_hg(text: &str) -> Result<Parsed<Hypergraph>, FormatError> {
    parse_hg_lines(text.lines())
}

pub fn serialize_hg(h: &Hypergraph) -> String {
    let mut out = format!("p hg {} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        out.push('e');
        for v in e.iter() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

pub fn inline_hg(h: &Hypergraph) -> String {
    serialize_hg(h).trim_end().replace('\n', "; ")
}

pub fn parse_inline_hg(text: &str) -> Result<Parsed<Hypergraph>, FormatError> {
    parse_hg_lines(text.split(';'))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphJson {
    fn from(h: &Hypergraph) -> Self {
        HypergraphJson { n: h.vertex_count(), edges: h.edges().iter().map(|e| e.iter().collect()).collect() }
    }
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphJson::from(h)).expect("plain data serialises")
}

pub fn from_json(text: &str) -> Result<Hypergraph, FormatError> {
    let raw: HypergraphJson =
        serde_json::from_str(text).map_err(|e| FormatError { line: e.line(), message: e.to_string() })?;
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in &raw.edges {
        if e.is_empty() {
            return err(0, "empty edge");
        }
        if let Some(&v) = e.iter().find(|&&v| v >= raw.n) {
            return err(0, format!("vertex index out of range: {v} (vertex count {})", raw.n));
        }
        edges.push(VertexSet::from_vertices(e.iter().copied()));
    }
    Hypergraph::new(raw.n, edges).map_err(|e| FormatError { line: 0, message: e.to_string() })
}

/// Read either format: JSON when the first non-blank character is `{`.
pub fn parse_any(text: &str) -> Result<Parsed<Hypergraph>, FormatError> {
    if text.trim_start().starts_with('{') {
        from_json(text).map(|value| Parsed { value, warnings: Vec::new() })
    } else {
        parse_hg(text)
    }
}

/// Rationals are always written `p/q`.
pub struct Ratio<'a>(pub &'a Rational);

impl fmt::Display for Ratio<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

pub fn parse_rational(token: &str) -> Option<Rational> {
    let (p, q) = token.split_once('/').unwrap_or((token, "1"));
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Rational::new(p, q))
}

/// Lines `g <p/q> <inline hypergraph>`.
pub fn serialize_motif(gamma: &MotifParameter) -> String {
    gamma.iter().map(|(h, c)| format!("g {} {}\n", Ratio(c), inline_hg(h))).collect()
}

pub fn parse_motif(text: &str) -> Result<MotifParameter, FormatError> {
    let mut gamma = MotifParameter::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let mut parts = l.splitn(3, char::is_whitespace);
        if parts.next() != Some("g") {
            return err(line, "expected \"g <p/q> <inline hypergraph>\"");
        }
        let coefficient = parts
            .next()
            .and_then(parse_rational)
            .ok_or_else(|| FormatError { line, message: "malformed coefficient".into() })?;
        let inline = parts.next().ok_or_else(|| FormatError { line, message: "missing hypergraph".into() })?;
        let h = parse_inline_hg(inline).map_err(|e| FormatError { line, message: e.message })?.value;
        gamma.add(&h, coefficient).map_err(|e| FormatError { line, message: e.to_string() })?;
    }
    Ok(gamma)
}

/// Lines `c <host vertex> <pattern vertex>`, one per host vertex.
pub fn parse_colouring(text: &str, host_vertices: usize) -> Result<Vec<usize>, FormatError> {
    let mut colouring = vec![None; host_vertices];
    for (line, tokens) in content_lines(text.lines()) {
        if tokens[0] != "c" || tokens.len() != 3 {
            return err(line, "expected \"c <host vertex> <pattern vertex>\"");
        }
        let v = number(line, tokens[1], "host vertex")?;
        let c = number(line, tokens[2], "pattern vertex")?;
        if v >= host_vertices {
            return err(line, format!("vertex index out of range: {v} (vertex count {host_vertices})"));
        }
        if colouring[v].replace(c).is_some() {
            return err(line, format!("host vertex {v} coloured twice"));
        }
    }
    colouring
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| FormatError { line: 0, message: format!("host vertex {v} has no colour") }))
        .collect()
}

pub fn serialize_colouring(colouring: &[usize]) -> String {
    colouring.iter().enumerate().map(|(v, c)| format!("c {v} {c}\n")).collect()
}

/// Lines `b <node> <v1> ...` and `t <node> <node>`.
pub fn parse_decomposition(text: &str) -> Result<TreeDecomposition, FormatError> {
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut tree = Vec::new();
    for (line, tokens) in content_lines(text.lines()) {
        match tokens[0] {
            "b" if tokens.len() >= 2 => {
                let node = number(line, tokens[1], "node")?;
                let mut bag = VertexSet::EMPTY;
                for t in &tokens[2..] {
                    let v = number(line, t, "vertex")?;
                    if v >= hyperbasis_core::MAX_VERTICES {
                        return err(line, format!("vertex index out of range: {v}"));
                    }
                    bag = bag.with(v);
                }
                if bags.len() <= node {
                    bags.resize(node + 1, None);
                }
                if bags[node].replace(bag).is_some() {
                    return err(line, format!("node {node} has two bags"));
                }
            }
            "t" if tokens.len() == 3 => {
                tree.push((number(line, tokens[1], "node")?, number(line, tokens[2], "node")?));
            }
            _ => return err(line, "expected \"b <node> <vertices...>\" or \"t <node> <node>\""),
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| FormatError { line: 0, message: format!("node {i} has no bag") }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TreeDecomposition { bags, tree })
}

pub fn serialize_decomposition(d: &TreeDecomposition) -> String {
    let mut out = String::new();
    for (i, bag) in d.bags.iter().enumerate() {
        out.push_str(&format!("b {i}"));
        for v in bag.iter() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    for (a, b) in &d.tree {
        out.push_str(&format!("t {a} {b}\n"));
    }
    out
}

/// `p cn <|Y|> <|X|> <k>`, then `x <vertex> <part>` (parts 0-based) and
/// `a <y> <x>` lines.
pub fn parse_cn(text: &str) -> Result<BipartiteCNInstance, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut parts: Vec<Option<usize>> = Vec::new();
    let mut adjacency = Vec::new();
    for (line, tokens) in content_lines(text.lines()) {
        match (tokens[0], header) {
            ("p", None) => {
                if tokens.len() != 5 || tokens[1] != "cn" {
                    return err(line, "malformed header, expected \"p cn <|Y|> <|X|> <k>\"");
                }
                let x = number(line, tokens[3], "|X|")?;
                parts = vec![None; x];
                header = Some((number(line, tokens[2], "|Y|")?, x, number(line, tokens[4], "k")?));
            }
            ("p", Some(_)) => return err(line, "second header line"),
            (_, None) => return err(line, "line before the \"p cn\" header"),
            ("x", Some((_, x, _))) if tokens.len() == 3 => {
                let v = number(line, tokens[1], "vertex")?;
                if v >= x {
                    return err(line, format!("vertex index out of range: {v} (|X| = {x})"));
                }
                if parts[v].replace(number(line, tokens[2], "part")?).is_some() {
                    return err(line, format!("vertex {v} assigned twice"));
                }
            }
            ("a", Some((y_count, x, _))) if tokens.len() == 3 => {
                let y = number(line, tokens[1], "y vertex")?;
                let v = number(line, tokens[2], "x vertex")?;
                if y >= y_count || v >= x {
                    return err(line, format!("edge ({y}, {v}) out of range"));
                }
                adjacency.push((y, v));
            }
            _ => return err(line, "expected \"x <vertex> <part>\" or \"a <y> <x>\""),
        }
    }
    let Some((y, _, k)) = header else {
        return err(0, "missing \"p cn\" header");
    };
    let part_of = parts
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| FormatError { line: 0, message: format!("vertex {v} has no part") }))
        .collect::<Result<Vec<_>, _>>()?;
    BipartiteCNInstance::new(y, part_of, k, adjacency).map_err(|e| FormatError { line: 0, message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_from_text() {
        let h = parse_hg("p hg 3 1\ne 0 1 2\n").unwrap().value;
        assert_eq!(h, Hypergraph::from_lists(3, &[&[0, 1, 2]]).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_hg("# x\np hg 3 1\ne 0 5\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("vertex index out of range"));
        assert_eq!(parse_hg("p hg 3 1\ne\n").unwrap_err().message, "empty edge");
        assert_eq!(parse_hg("p hg x 1\n").unwrap_err().line, 1);
        assert!(parse_hg("p hg 3 2\ne 0\n").is_err());
    }

    #[test]
    fn duplicate_edges_warn() {
        let parsed = parse_hg("p hg 2 2\ne 0 1\ne 1 0\n").unwrap();
        assert_eq!(parsed.value.edge_count(), 1);
        assert_eq!(parsed.warnings.len(), 1);
    }

    #[test]
    fn rational_text() {
        let r = parse_rational("6/4").unwrap();
        assert_eq!(Ratio(&r).to_string(), "3/2");
        assert_eq!(Ratio(&parse_rational("3").unwrap()).to_string(), "3/1");
        assert!(parse_rational("1/0").is_none());
    }
}
