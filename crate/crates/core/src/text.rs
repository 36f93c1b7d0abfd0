//! The `.hg` hypergraph format and the labeling report format.
//!
//! `.hg`: one edge per line as whitespace-separated vertex tokens; blank
//! lines and lines whose first non-blank character is `#` are ignored.
//!
//! Labeling report: `v <vertex> <weight>` per vertex in vertex order, then
//! `e <i> <edge weight>` per edge (one-based), then `total <w>`. The same
//! text is accepted back as a `.lbl` file, so every labeling the crate
//! prints can be re-validated.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::hypergraph::{edge_weights, Hypergraph, HypergraphError, Labeling, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: duplicate edge (same vertex set as line {first})")]
    DuplicateEdge { line: usize, first: usize },
    #[error("line {line}: empty edge")]
    EmptyEdge { line: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("no edges found")]
    NoEdges,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((k + 1, t))
        }
    })
}

/// Parses `.hg` text. Edges are numbered in line order; vertices in order of
/// first appearance.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let mut lines_of_edge = Vec::new();
    let mut edges: Vec<Vec<&str>> = Vec::new();
    for (line, t) in content_lines(text) {
        edges.push(t.split_whitespace().collect());
        lines_of_edge.push(line);
    }
    if edges.is_empty() {
        return Err(ParseError::NoEdges);
    }
    Hypergraph::from_edges(edges).map_err(|e| match e {
        HypergraphError::DuplicateEdge { first, second } => ParseError::DuplicateEdge {
            line: lines_of_edge[second],
            first: lines_of_edge[first],
        },
        HypergraphError::EmptyEdge { edge } => ParseError::EmptyEdge {
            line: lines_of_edge[edge],
        },
        other => ParseError::Malformed {
            line: 0,
            message: other.to_string(),
        },
    })
}

/// Canonical `.hg` text: one line per edge, tokens in vertex-index order.
pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    for e in h.edges() {
        let tokens: Vec<&str> = e.iter().map(|&v| h.vertex_name(v)).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

/// Renders the labeling report for `labeling` on `h`.
pub fn format_labeling(h: &Hypergraph, labeling: &Labeling) -> Result<String, HypergraphError> {
    let weights = edge_weights(h, labeling)?;
    let mut out = String::new();
    for (v, name) in h.vertices().iter().enumerate() {
        writeln!(out, "v {} {}", name, labeling.get(v)).unwrap();
    }
    for (i, w) in weights.iter().enumerate() {
        writeln!(out, "e {} {}", i + 1, w).unwrap();
    }
    writeln!(out, "total {}", labeling.total_weight()).unwrap();
    Ok(out)
}

fn parse_weight(token: Option<&str>, line: usize) -> Result<Weight, ParseError> {
    let token = token.ok_or_else(|| ParseError::Malformed {
        line,
        message: "missing weight".into(),
    })?;
    token.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("`{token}` is not a non-negative integer"),
    })
}

/// Reads a labeling report against `h`. Vertices without a `v` line get 0.
/// When `e` or `total` lines are present they must agree with the `v` lines.
pub fn parse_labeling(h: &Hypergraph, text: &str) -> Result<Labeling, ParseError> {
    let mut labeling = Labeling::zeros(h.vertex_count());
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut claimed_edges = Vec::new();
    let mut claimed_total = None;
    for (line, t) in content_lines(text) {
        let mut parts = t.split_whitespace();
        let kind = parts.next().unwrap_or_default();
        match kind {
            "v" => {
                let name = parts.next().ok_or_else(|| ParseError::Malformed {
                    line,
                    message: "missing vertex".into(),
                })?;
                let v = h.vertex_index(name).ok_or_else(|| ParseError::Malformed {
                    line,
                    message: format!("unknown vertex `{name}`"),
                })?;
                let w = parse_weight(parts.next(), line)?;
                if let Some(prev) = seen.insert(v, line) {
                    return Err(ParseError::Malformed {
                        line,
                        message: format!("vertex `{name}` already labeled on line {prev}"),
                    });
                }
                labeling.set(v, w);
            }
            "e" => {
                let i: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .filter(|&i| i >= 1 && i <= h.edge_count())
                    .ok_or_else(|| ParseError::Malformed {
                        line,
                        message: "bad edge index".into(),
                    })?;
                claimed_edges.push((line, i - 1, parse_weight(parts.next(), line)?));
            }
            "total" => claimed_total = Some((line, parse_weight(parts.next(), line)?)),
            other => {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("unknown record `{other}`"),
                })
            }
        }
        if let Some(extra) = parts.next() {
            return Err(ParseError::Malformed {
                line,
                message: format!("unexpected token `{extra}`"),
            });
        }
    }
    let actual = edge_weights(h, &labeling).expect("labeling sized to hypergraph");
    for (line, i, w) in claimed_edges {
        if actual[i] != w {
            return Err(ParseError::Malformed {
                line,
                message: format!("edge {} weighs {} under the listed labels, not {}", i + 1, actual[i], w),
            });
        }
    }
    if let Some((line, w)) = claimed_total {
        if labeling.total_weight() != w {
            return Err(ParseError::Malformed {
                line,
                message: format!("labels sum to {}, not {}", labeling.total_weight(), w),
            });
        }
    }
    Ok(labeling)
}
