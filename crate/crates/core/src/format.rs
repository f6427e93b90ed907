//! Graph text formats: graph6 (short form, up to 62 vertices) and a plain
//! edge list.
//!
//! graph6 stores `n + 63` in one byte followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte with 63 added to each byte and zero padding.
//!
//! The edge list holds one `u v` pair per line (0-based). Blank lines and
//! `#` comments are ignored. The vertex count is the largest index plus one
//! unless a `# n = <count>` line says otherwise.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const SHORT_FORM_MAX: usize = 62;

fn g6_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(GRAPH6_HEADER) {
        bytes = rest.as_bytes();
        base = GRAPH6_HEADER.len();
    }
    while let [head @ .., b'\n' | b'\r'] = bytes {
        bytes = head;
    }
    let Some(&first) = bytes.first() else {
        return Err(g6_error(base, "empty input"));
    };
    if first == 126 {
        return Err(g6_error(base, "long-form header (more than 62 vertices) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(g6_error(base, format!("malformed header byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    debug_assert!(n <= SHORT_FORM_MAX);
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    let body = &bytes[1..];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_error(base + 1 + i, format!("out-of-range character {b:#04x}")));
        }
    }
    if body.len() < byte_count {
        return Err(g6_error(
            base + bytes.len(),
            format!("truncated bit string: expected {byte_count} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > byte_count {
        return Err(g6_error(base + 1 + byte_count, "trailing data after bit string"));
    }

    let bit = |k: usize| -> bool {
        let byte = body[k / 6] - 63;
        byte & (0x20 >> (k % 6)) != 0
    };
    let padding_start = bit_count;
    if (padding_start..byte_count * 6).any(bit) {
        return Err(g6_error(base + byte_count, "nonzero padding bits"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph of at most 62 vertices as graph6 (no header, no newline).
pub fn to_graph6(graph: &Graph) -> Result<String> {
    let n = graph.vertex_count();
    if n > SHORT_FORM_MAX {
        return Err(Error::Capacity {
            what: "graph6 short form".into(),
            requested: n as u128,
            limit: SHORT_FORM_MAX,
        });
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | graph.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// One decoded line of a graph6 stream.
#[derive(Debug)]
pub struct Graph6Line {
    /// 1-based line number in the input.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph>,
}

/// Splits a multi-line graph6 document, skipping blank lines. Malformed
/// lines are returned with their error so callers can log and continue.
pub fn parse_graph6_lines(input: &str) -> Vec<Graph6Line> {
    input
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.trim();
            if text.is_empty() {
                return None;
            }
            let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text).to_string();
            Some(Graph6Line {
                line: i + 1,
                graph: from_graph6(&text),
                text,
            })
        })
        .collect()
}

/// Parses the edge-list text format.
pub fn parse_edge_list(input: &str) -> Result<Graph> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| Error::EdgeList {
            line: line_no,
            message,
        };
        let (content, comment) = match raw.split_once('#') {
            Some((c, m)) => (c, Some(m)),
            None => (raw, None),
        };
        if let Some(comment) = comment {
            let compact: String = comment.chars().filter(|c| !c.is_whitespace()).collect();
            if let Some(value) = compact.strip_prefix("n=") {
                let n = value
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad vertex count {value:?}")))?;
                declared_n = Some(n);
            }
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => {
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| err(format!("expected a vertex index, found {s:?}")))
                };
                edges.push((parse(u)?, parse(v)?));
            }
            _ => return Err(err(format!("expected two vertex indices, found {}", fields.len()))),
        }
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < implied => {
            return Err(Error::EdgeList {
                line: 0,
                message: format!("declared n = {n} but an edge uses vertex {}", implied - 1),
            })
        }
        Some(n) => n,
        None => implied,
    };
    Graph::from_edges(n, edges)
}
