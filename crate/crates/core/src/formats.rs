//! Text formats: a plain edge list and graph6.
//!
//! Edge list: first non-comment line `n m`, then `m` lines `u v` with
//! 0-based vertex indices. Lines starting with `#` and blank lines are
//! skipped. Duplicate edges are accepted.
//!
//! graph6: size byte(s) followed by the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six
//! bits per byte, each byte offset by 63.

use std::fmt::Write as _;

use crate::error::{ParseError, MAX_VERTICES};
use crate::graph::Graph;

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| malformed(line, format!("expected a nonnegative integer, found {tok:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| malformed(1, "missing \"n m\" header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = toks[..] else {
        return Err(malformed(hline, "header must be \"n m\""));
    };
    let n = parse_usize(n, hline)?;
    let m = parse_usize(m, hline)?;
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { line: hline, n });
    }

    let mut g = Graph::empty(n).expect("size checked above");
    let mut seen = 0;
    for (line, body) in lines {
        if seen == m {
            return Err(malformed(line, format!("more than the declared {m} edges")));
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = toks[..] else {
            return Err(malformed(line, "edge line must be \"u v\""));
        };
        let u = parse_usize(u, line)?;
        let v = parse_usize(v, line)?;
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(ParseError::LoopEdge { line, vertex: u });
        }
        g.add_edge(u, v).expect("validated edge");
        seen += 1;
    }
    if seen < m {
        let last = text.lines().count().max(1);
        return Err(malformed(last, format!("expected {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. A leading `>>graph6<<` header and a trailing
/// line break are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::Graph6BadChar { pos, byte });
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(ParseError::Graph6BadLength { expected: 1, found: 0 });
    };
    let (n, body) = if first == 126 {
        if bytes.get(1) == Some(&126) {
            // 36-bit form; only meaningful beyond 258047 vertices
            return Err(ParseError::TooManyVertices { line: 1, n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(ParseError::Graph6BadLength { expected: 4, found: bytes.len() });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        (usize::from(first - 63), &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { line: 1, n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(ParseError::Graph6BadLength { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(ParseError::Graph6Trailing);
    }

    let mut g = Graph::empty(n).expect("size checked above");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v).expect("in range");
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(ParseError::Graph6Trailing);
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|c| c as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
