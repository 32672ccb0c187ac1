//! graph6 encoding for graphs of order at most 16.

use thiserror::Error;

use super::{Graph, VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 order {0} exceeds the supported maximum of 16")]
    TooLarge(usize),
    #[error("truncated graph6 string: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data at offset {offset}")]
    Trailing { offset: usize },
    #[error("nonzero padding bits at offset {offset}")]
    Padding { offset: usize },
}

impl Graph6Error {
    /// Byte offset at which decoding failed.
    pub fn offset(&self) -> usize {
        match *self {
            Graph6Error::Empty => 0,
            Graph6Error::InvalidByte { offset, .. } => offset,
            Graph6Error::TooLarge(_) => 0,
            Graph6Error::Truncated { found, .. } => found,
            Graph6Error::Trailing { offset } => offset,
            Graph6Error::Padding { offset } => offset,
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((63 + n as u8) as char);
    let mut word = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            word = (word << 1) | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push((63 + word) as char);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((63 + (word << (6 - bits))) as char);
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    let first = *body.first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::InvalidByte { offset: skip, byte: first });
    }
    let n = (first - 63) as usize;
    if first == 126 {
        // Extended orders are always above 62.
        return Err(Graph6Error::TooLarge(63));
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = 1 + pairs.div_ceil(6);
    for (i, &b) in body.iter().enumerate().skip(1).take(expected - 1) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: skip + i, byte: b });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected: skip + expected, found: skip + body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing { offset: skip + expected });
    }
    let mut rows: [VertexSet; MAX_VERTICES] = [0; MAX_VERTICES];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    if !pairs.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding { offset: skip + expected - 1 });
        }
    }
    Ok(Graph::from_rows_unchecked(n, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::path(4)), "Ch");
        assert_eq!(decode_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(decode_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn errors() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        let e = decode_graph6("B").unwrap_err();
        assert!(matches!(e, Graph6Error::Truncated { .. }));
        assert_eq!(e.offset(), 1);
        assert!(matches!(decode_graph6("Bww"), Err(Graph6Error::Trailing { offset: 2 })));
        assert!(matches!(decode_graph6("B\x01"), Err(Graph6Error::InvalidByte { offset: 1, .. })));
        assert!(matches!(decode_graph6("Q"), Err(Graph6Error::TooLarge(18))));
        assert!(matches!(decode_graph6("B~"), Err(Graph6Error::Padding { offset: 1 })));
    }

    #[test]
    fn sixteen_vertices_round_trip() {
        let g = Graph::complete(16);
        assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        let c = Graph::cycle(16);
        assert_eq!(decode_graph6(&encode_graph6(&c)).unwrap(), c);
    }
}
