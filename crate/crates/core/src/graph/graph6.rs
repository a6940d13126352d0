//! graph6 codec.
//!
//! Layout: a size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3)…`),
//! packed six bits per byte, most significant bit first, each byte offset
//! by 63. Trailing pad bits must be zero.

use super::{Graph, GraphError};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);

    let adj = g.adjacency_matrix();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i][j];
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

fn malformed(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6 { offset, reason: reason.into() }
}

/// Parses one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();

    for (k, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(malformed(base + k, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let (n, mut pos) = decode_size(bytes, base)?;

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let remaining = bytes.len() - pos;
    if remaining != expected {
        return Err(malformed(
            base + pos,
            format!("expected {expected} adjacency bytes for n={n}, found {remaining}"),
        ));
    }

    let mut pairs = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - OFFSET;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                pairs.push((i + 1, j + 1));
            }
            bit += 1;
        }
    }
    pos += bit / 6;
    if !bit.is_multiple_of(6) {
        let byte = bytes[pos] - OFFSET;
        let pad_mask = (1u8 << (6 - bit % 6)) - 1;
        if byte & pad_mask != 0 {
            return Err(malformed(base + pos, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, pairs)
}

fn decode_size(bytes: &[u8], base: usize) -> Result<(usize, usize), GraphError> {
    let take = |from: usize, count: usize| -> Result<usize, GraphError> {
        if bytes.len() < from + count {
            return Err(malformed(base + bytes.len(), "truncated size prefix"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize))
    };
    match bytes.first() {
        None => Err(malformed(base, "empty graph6 string")),
        Some(&126) if bytes.get(1) == Some(&126) => Ok((take(2, 6)?, 8)),
        Some(&126) => Ok((take(1, 3)?, 4)),
        Some(&b) => Ok(((b - OFFSET) as usize, 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, Graph};

    // Reference strings produced by an independent graph6 writer.
    #[test]
    fn small_reference_strings() {
        let k2 = Graph::from_edge_list(2, [(1, 2)]).unwrap();
        assert_eq!(emit_graph6(&k2), "A_");
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        let g = Graph::from_edge_list(6, [(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6)])
            .unwrap();
        assert_eq!(emit_graph6(&g), "EjKG");
        assert_eq!(emit_graph6(&crate::graph::cycle(8)), "GhCGKC");
        assert_eq!(emit_graph6(&crate::graph::star(4)), "Ds_");
    }

    #[test]
    fn long_size_prefix() {
        let p = path(70);
        let text = emit_graph6(&p);
        assert!(text.starts_with("~?@E"));
        assert_eq!(parse_graph6(&text).unwrap(), p);
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(
            parse_graph6(""),
            Err(GraphError::MalformedGraph6 { offset: 0, reason: "empty graph6 string".into() })
        );
        match parse_graph6("A_x\u{1}") {
            Err(GraphError::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        // K2 needs exactly one data byte.
        match parse_graph6("A__") {
            Err(GraphError::MalformedGraph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        // 'A' + 0b100001: the low bit is padding.
        match parse_graph6("A`") {
            Err(GraphError::MalformedGraph6 { offset, reason }) => {
                assert_eq!(offset, 1);
                assert!(reason.contains("padding"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph6("~?").is_err());
    }
}
