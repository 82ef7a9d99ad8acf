//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! Comment lines start with `#`; blank lines are ignored. The header
//! declares the vertex count `n` and the edge count `m`, followed by
//! exactly `m` edge lines with `0 <= u, v < n` and `u != v`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use super::Graph;

/// Upper bound on the declared vertex count. Every downstream algorithm is
/// dense, so anything larger is rejected at parse time.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed {what}: {content:?}")]
    Malformed {
        line: usize,
        what: &'static str,
        content: String,
    },
    #[error("line {line}: vertex count must be positive")]
    ZeroVertices { line: usize },
    #[error("line {line}: vertex count {n} exceeds the limit of {MAX_VERTICES}")]
    TooManyVertices { line: usize, n: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u},{v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

fn two_numbers(
    line: usize,
    text: &str,
    what: &'static str,
) -> Result<(usize, usize), EdgeListError> {
    let malformed = || EdgeListError::Malformed {
        line,
        what,
        content: text.to_string(),
    };
    let mut fields = text.split_whitespace();
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed());
    };
    let a = a.parse::<usize>().map_err(|_| malformed())?;
    let b = b.parse::<usize>().map_err(|_| malformed())?;
    Ok((a, b))
}

/// Parses an edge list. Line numbers in errors are 1-based.
pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph, EdgeListError> {
    let text = std::str::from_utf8(bytes).map_err(|_| EdgeListError::InvalidUtf8)?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = two_numbers(header_line, header, "header")?;
    if n == 0 {
        return Err(EdgeListError::ZeroVertices { line: header_line });
    }
    if n > MAX_VERTICES {
        return Err(EdgeListError::TooManyVertices {
            line: header_line,
            n,
        });
    }

    let mut edges = BTreeSet::new();
    let mut found = 0;
    for (line, content) in lines {
        let (u, v) = two_numbers(line, content, "edge")?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        let (u, v) = (u.min(v), u.max(v));
        if !edges.insert((u, v)) {
            return Err(EdgeListError::DuplicateEdge { line, u, v });
        }
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCountMismatch { declared: m, found });
    }
    Ok(Graph { n, edges })
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph, EdgeListError> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|e| EdgeListError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_edge_list(&bytes)
}

/// Header line then one `u v` line per edge, `u < v`, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
