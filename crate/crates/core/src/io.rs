//! graph6 and edge-list text formats.
//!
//! graph6 is supported in its short form only (n <= 62): one header byte
//! `63 + n`, then the upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte, big-endian,
//! zero-padded, each byte offset by 63.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{bit, Graph};

/// Largest order representable in the short graph6 form.
pub const GRAPH6_MAX_ORDER: usize = 62;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses a single graph6 line. A leading `>>graph6<<` marker and trailing
/// whitespace are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let text = line.trim_end_matches(['\n', '\r', ' ', '\t']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, payload) = bytes.split_first().ok_or(ParseError::Graph6Empty)?;
    if !(63..=126).contains(&head) {
        return Err(ParseError::Graph6Byte { offset: 0, byte: head });
    }
    if head == 126 {
        return Err(ParseError::Graph6TooLarge);
    }
    let n = (head - 63) as usize;
    if let Some((i, &b)) = payload.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(ParseError::Graph6Byte { offset: i + 1, byte: b });
    }
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(ParseError::Graph6Length { expected, got: payload.len() });
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(rows)?)
}

/// Encodes a graph as graph6 (without a trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(ParseError::Graph6TooLarge);
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                acc |= 0x20 >> (k % 6);
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(63 + acc);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// (0-based). Tokens are whitespace separated; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut col = 0;
        for piece in line.split_inclusive(char::is_whitespace) {
            let tok = piece.trim_end();
            if !tok.is_empty() {
                tokens.push((ln + 1, col + 1, tok));
            }
            col += piece.len();
        }
    }
    let mut it = tokens.into_iter();
    let mut next_num = |what: &str| -> Result<usize, ParseError> {
        match it.next() {
            Some((line, column, tok)) => tok.parse::<usize>().map_err(|_| ParseError::EdgeList {
                line,
                column,
                message: format!("expected {what}, found {tok:?}"),
            }),
            None => Err(ParseError::EdgeList { line: 0, column: 0, message: format!("missing {what}") }),
        }
    };
    let n = next_num("vertex count")?;
    let m = next_num("edge count")?;
    let mut g = Graph::empty(n)?;
    for _ in 0..m {
        let u = next_num("edge endpoint")?;
        let v = next_num("edge endpoint")?;
        g.try_add_edge(u, v)?;
    }
    if let Some((line, column, tok)) = it.next() {
        return Err(ParseError::EdgeList { line, column, message: format!("unexpected trailing token {tok:?}") });
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}
