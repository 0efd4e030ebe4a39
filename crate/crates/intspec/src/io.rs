//! Text formats: the edge-list graph format and the one-line labeling
//! format. Parse errors carry 1-based line numbers.
//!
//! Edge list: first line `n m`, then exactly m lines `u v` with 0-based
//! vertex indices. Labeling: m whitespace-separated integers, position =
//! edge index, value = label; newlines count as whitespace.

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::labeling::{EdgeLabeling, LabelingError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    InvalidGraph { line: usize, source: GraphError },
    #[error(transparent)]
    InvalidLabeling(#[from] LabelingError),
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax { line, message: message.into() }
}

fn parse_number(token: &str, line: usize) -> Result<usize, IoError> {
    token.parse().map_err(|_| syntax(line, format!("bad number {token:?}")))
}

/// Line number an edge-index error refers to: edges start on line 2.
fn edge_line(index: usize) -> usize {
    index + 2
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| syntax(1, "missing \"n m\" header"))?;
    let header_tokens: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = header_tokens[..] else {
        return Err(syntax(1, format!("expected \"n m\", got {header:?}")));
    };
    let n = parse_number(n, 1)?;
    let m = parse_number(m, 1)?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        if edges.len() == m {
            if !content.trim().is_empty() {
                return Err(syntax(line, format!("unexpected content after {m} edges")));
            }
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(syntax(line, format!("expected \"u v\", got {content:?}")));
        };
        edges.push((parse_number(u, line)?, parse_number(v, line)?));
    }
    if edges.len() < m {
        return Err(syntax(edge_line(edges.len()), format!("expected {m} edges, found {}", edges.len())));
    }

    Graph::new(n, edges).map_err(|e| match e {
        GraphError::LoopEdge { index, .. }
        | GraphError::ParallelEdge { index, .. }
        | GraphError::EndpointOutOfRange { index, .. } => {
            IoError::InvalidGraph { line: edge_line(index), source: e }
        }
        other => IoError::InvalidGraph { line: 1, source: other },
    })
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_labeling(g: &Graph, text: &str) -> Result<EdgeLabeling, IoError> {
    let labels = text
        .split_whitespace()
        .map(|token| parse_number(token, 1))
        .collect::<Result<Vec<usize>, IoError>>()?;
    Ok(EdgeLabeling::new(g, labels)?)
}

pub fn emit_labeling(phi: &EdgeLabeling) -> String {
    let mut out = phi
        .labels()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<String>>()
        .join(" ");
    out.push('\n');
    out
}
