//! Edge-list and graph6 encodings.
//!
//! The edge list is a header line `n m` followed by `m` lines `u v` with
//! 0-based endpoints. graph6 packs the upper triangle of the adjacency
//! matrix column by column into 6-bit groups offset by 63.

use std::fmt::Write as _;

use impart_core::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: endpoint {vertex} is out of range for {n} vertices")]
    EndpointOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("header declares {declared} edges but {found} were listed")]
    CountMismatch { declared: usize, found: usize },
    #[error("graph6: invalid byte {0:#04x}")]
    InvalidByte(u8),
    #[error("graph6: {0}")]
    Graph6(&'static str),
    #[error("expected exactly one graph, found {0}")]
    GraphCount(usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    #[value(name = "edgelist")]
    EdgeList,
    Graph6,
}

impl Format {
    pub fn parse(self, text: &str) -> Result<Graph, FormatError> {
        match self {
            Format::EdgeList => parse_edge_list(text),
            Format::Graph6 => {
                let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
                match lines.as_slice() {
                    [line] => parse_graph6(line),
                    other => Err(FormatError::GraphCount(other.len())),
                }
            }
        }
    }

    /// Encodes `graph`; the result always ends in a newline.
    pub fn emit(self, graph: &Graph) -> String {
        match self {
            Format::EdgeList => emit_edge_list(graph),
            Format::Graph6 => {
                let mut line = emit_graph6(graph);
                line.push('\n');
                line
            }
        }
    }
}

fn malformed(line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), FormatError> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let field = fields
            .next()
            .ok_or_else(|| malformed(line_no, format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| malformed(line_no, format!("`{field}` is not a non-negative integer")))
    };
    let pair = (next("first field")?, next("second field")?);
    if fields.next().is_some() {
        return Err(malformed(line_no, "expected two fields"));
    }
    Ok(pair)
}

/// Parses an edge list. Blank lines are ignored; self-loops and repeated
/// edges are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
    let (n, declared) = parse_pair(header_line, header)?;
    let mut edges = Vec::with_capacity(declared);
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(FormatError::EndpointOutOfRange {
                    line: line_no,
                    vertex,
                    n,
                });
            }
        }
        if u == v {
            return Err(malformed(line_no, format!("self-loop at {u}")));
        }
        edges.push((line_no, (u.min(v), u.max(v))));
    }
    if edges.len() != declared {
        return Err(FormatError::CountMismatch {
            declared,
            found: edges.len(),
        });
    }
    let mut sorted: Vec<_> = edges.iter().map(|&(l, e)| (e, l)).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
        let (u, v) = w[1].0;
        return Err(malformed(
            w[1].1.max(w[0].1),
            format!("repeated edge {u} {v}"),
        ));
    }
    Ok(Graph::new(n, edges.into_iter().map(|(_, e)| e)).expect("edges validated"))
}

pub fn emit_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.order(), graph.size());
    for &(u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
/// Largest order representable with the 8-byte size prefix.
const GRAPH6_MAX_ORDER: usize = (1 << 36) - 1;

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
}

/// Encodes `graph` as a single graph6 line, without header or newline.
pub fn emit_graph6(graph: &Graph) -> String {
    let n = graph.order();
    assert!(n <= GRAPH6_MAX_ORDER, "graph too large for graph6");
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(graph.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextets(bytes: &[u8]) -> Result<Vec<u8>, FormatError> {
    bytes
        .iter()
        .map(|&b| {
            if (BIAS..=126).contains(&b) {
                Ok(b - BIAS)
            } else {
                Err(FormatError::InvalidByte(b))
            }
        })
        .collect()
}

fn read_order(data: &[u8]) -> Result<(usize, &[u8]), FormatError> {
    let value = |groups: &[u8]| {
        groups
            .iter()
            .fold(0usize, |acc, &g| (acc << 6) | usize::from(g))
    };
    match data {
        [63, 63, rest @ ..] => {
            let (digits, body) = rest
                .split_at_checked(6)
                .ok_or(FormatError::Graph6("truncated order"))?;
            let n = value(digits);
            if n <= 258_047 {
                return Err(FormatError::Graph6("order not in shortest form"));
            }
            Ok((n, body))
        }
        [63, rest @ ..] => {
            let (digits, body) = rest
                .split_at_checked(3)
                .ok_or(FormatError::Graph6("truncated order"))?;
            let n = value(digits);
            if n <= 62 {
                return Err(FormatError::Graph6("order not in shortest form"));
            }
            Ok((n, body))
        }
        [first, rest @ ..] => Ok((usize::from(*first), rest)),
        [] => Err(FormatError::Graph6("empty input")),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted; padding bits must be zero so that decoding and
/// re-encoding reproduces the input.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if line.starts_with(':') || line.starts_with('&') {
        return Err(FormatError::Graph6(
            "sparse6 and digraph6 are not supported",
        ));
    }
    let data = sextets(line.as_bytes())?;
    let (n, body) = read_order(&data)?;
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .ok_or(FormatError::Graph6("order too large"))?
        / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6("body length does not match the order"));
    }
    let bit = |idx: usize| body[idx / 6] >> (5 - idx % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(FormatError::Graph6("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(parse_edge_list("0 0").unwrap(), Graph::empty(0));
        assert_eq!(
            parse_edge_list("2 1\n0 2"),
            Err(FormatError::EndpointOutOfRange {
                line: 2,
                vertex: 2,
                n: 2
            })
        );
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(FormatError::CountMismatch {
                declared: 2,
                found: 1
            })
        ));
        assert!(parse_edge_list("3 1\n0 x").is_err());
        assert!(parse_edge_list("3 1\n0 1 2").is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0").is_err());
        assert!(parse_edge_list("3 1\n1 1").is_err());
        assert!(parse_edge_list("").is_err());
        assert_eq!(emit_edge_list(&p3), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn graph6_hand_packed() {
        assert_eq!(emit_graph6(&Graph::complete(2)), "A_");
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        // K4: six set bits give one sextet 111111
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
    }

    #[test]
    fn graph6_d_example_round_trips() {
        // D?{ : n = 5, bits 000000 111100 → edges 0-4, 1-4, 2-4, 3-4
        let g = parse_graph6("D?{").unwrap();
        let star = Graph::new(5, [(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, star);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn graph6_long_order() {
        let g = Graph::path(70);
        let line = emit_graph6(&g);
        assert_eq!(&line.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(parse_graph6(&line).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("A"), Err(FormatError::Graph6(_))));
        assert!(matches!(parse_graph6("A`"), Err(FormatError::Graph6(_))));
        assert!(matches!(
            parse_graph6("A\x7f"),
            Err(FormatError::InvalidByte(0x7f))
        ));
        assert!(parse_graph6(":Fa@x^").is_err());
        assert!(parse_graph6("").is_err());
        assert!(matches!(
            Format::Graph6.parse("A_\n@\n"),
            Err(FormatError::GraphCount(2))
        ));
    }
}
