//! Graph interchange: graph6, a plain edge list, and DOT for drawings.
//!
//! Vertex numbering is preserved by every format. graph6 and the edge list
//! both list edges in a canonical order, so a graph read back from either has
//! the same edge set but possibly different edge ids than the original.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeSet, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("graph6: truncated size header")]
    TruncatedHeader,
    #[error("graph6: vertex count {0} must use the shortest size header")]
    NonCanonicalHeader(usize),
    #[error("graph6: expected {expected} payload bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("graph6: padding bits in the last byte are not zero")]
    NonzeroPadding,
    #[error("graph6: vertex count {0} exceeds the format limit")]
    TooManyVertices(usize),
    #[error("edge list line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("edge list declares {declared} edges but lists {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const GRAPH6_MAX_N: usize = 68_719_476_735;

fn check_byte(offset: usize, byte: u8) -> Result<u8, FormatError> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(FormatError::BadCharacter { offset, byte })
    }
}

/// Decodes a graph6 string (no `>>graph6<<` header, no trailing newline).
pub fn parse_graph6(s: &str) -> Result<Graph, FormatError> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        check_byte(offset, byte)?;
    }
    let value = |range: std::ops::Range<usize>| -> Result<usize, FormatError> {
        let chunk = bytes.get(range).ok_or(FormatError::TruncatedHeader)?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (value(1..4)?, 4)
    } else {
        (value(2..8)?, 8)
    };
    if (header == 4 && n < 63) || (header == 8 && n <= 258_047) {
        return Err(FormatError::NonCanonicalHeader(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &bytes[header..];
    if payload.len() != expected {
        return Err(FormatError::WrongLength {
            expected,
            found: payload.len(),
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (payload[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(FormatError::NonzeroPadding);
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = payload[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, &pairs)?)
}

/// Canonical graph6 encoding.
pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_N {
        return Err(FormatError::TooManyVertices(n));
    }
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        let width = if n <= 258_047 {
            out.push(126);
            3
        } else {
            out.extend([126, 126]);
            6
        };
        for i in (0..width).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + 63);
        }
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        let (i, j) = (u.min(v), u.max(v));
        let k = j * (j - 1) / 2 + i;
        groups[k / 6] |= 1 << (5 - k % 6);
    }
    out.extend(groups.into_iter().map(|b| b + 63));
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads `n m` followed by `m` lines `u v`. Blank lines are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let numbers = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let bad = |reason: &str| FormatError::Malformed {
            line,
            reason: reason.to_string(),
        };
        let fields: Vec<_> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad("expected two integers"));
        }
        let a = fields[0]
            .parse()
            .map_err(|_| bad("not a non-negative integer"))?;
        let b = fields[1]
            .parse()
            .map_err(|_| bad("not a non-negative integer"))?;
        Ok((a, b))
    };
    let (line, header) = lines.next().ok_or(FormatError::Malformed {
        line: 1,
        reason: "missing `n m` header".to_string(),
    })?;
    let (n, m) = numbers(line, header)?;
    let pairs = lines
        .map(|(line, l)| numbers(line, l))
        .collect::<Result<Vec<_>, _>>()?;
    if pairs.len() != m {
        return Err(FormatError::EdgeCountMismatch {
            declared: m,
            found: pairs.len(),
        });
    }
    Ok(Graph::new(n, &pairs)?)
}

/// `n m` then one `u v` line per edge with `u < v`, sorted.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut pairs: Vec<_> = (0..g.edge_count())
        .map(|e| g.ordered_endpoints(e))
        .collect();
    pairs.sort_unstable();
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in pairs {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Undirected DOT with the `highlight` edges drawn bold. Edges appear in id
/// order.
pub fn emit_dot(g: &Graph, highlight: &EdgeSet) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for e in 0..g.edge_count() {
        let (u, v) = g.ordered_endpoints(e);
        if highlight.contains(e) {
            let _ = writeln!(out, "  {u} -- {v} [style=bold, penwidth=3];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}
