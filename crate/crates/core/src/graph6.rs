//! graph6 text format (the undirected dense format; no sparse6/digraph6).
//!
//! Layout: the order `n` is encoded first (one byte `n+63` for `n <= 62`,
//! `'~'` + 3 bytes for 18-bit `n`, `"~~"` + 6 bytes for 36-bit `n`), then the
//! upper triangle of the adjacency matrix in column-major order — pairs
//! (0,1),(0,2),(1,2),(0,3),... — packed 6 bits per printable byte with
//! offset 63, most significant bit first, padding bits zero.

use crate::graph::{Graph, MAX_VERTICES};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph6Error {
    pub kind: Graph6ErrorKind,
    /// Byte position in the input at which the problem was detected.
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// A byte outside the printable range `63..=126`.
    InvalidByte { byte: u8 },
    /// Header truncated or otherwise malformed.
    MalformedHeader,
    /// Fewer adjacency bytes than the order requires.
    Truncated { expected: usize, got: usize },
    /// More bytes than the order requires.
    TrailingBytes,
    /// Padding bits after the last pair must be zero.
    NonzeroPadding,
    /// Order exceeds the supported maximum.
    TooLarge { n: u64 },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = self.offset;
        match &self.kind {
            Graph6ErrorKind::Empty => write!(f, "empty graph6 input"),
            Graph6ErrorKind::InvalidByte { byte } => {
                write!(f, "byte {byte:#04x} at offset {at} is not printable graph6 (63..=126)")
            }
            Graph6ErrorKind::MalformedHeader => write!(f, "malformed graph6 header at offset {at}"),
            Graph6ErrorKind::Truncated { expected, got } => write!(
                f,
                "graph6 body truncated at offset {at}: expected {expected} adjacency bytes, got {got}"
            ),
            Graph6ErrorKind::TrailingBytes => write!(f, "unexpected trailing bytes at offset {at}"),
            Graph6ErrorKind::NonzeroPadding => write!(f, "nonzero padding bits at offset {at}"),
            Graph6ErrorKind::TooLarge { n } => {
                write!(f, "graph6 order {n} exceeds supported maximum {MAX_VERTICES}")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

fn err(kind: Graph6ErrorKind, offset: usize) -> Graph6Error {
    Graph6Error { kind, offset }
}

fn check_printable(bytes: &[u8]) -> Result<(), Graph6Error> {
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(Graph6ErrorKind::InvalidByte { byte: b }, i));
        }
    }
    Ok(())
}

/// Parses one graph6 value. A single trailing newline (`\n` or `\r\n`) is
/// tolerated; anything else must be part of the encoding.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.as_bytes();
    if bytes.ends_with(b"\n") {
        bytes = &bytes[..bytes.len() - 1];
    }
    if bytes.ends_with(b"\r") {
        bytes = &bytes[..bytes.len() - 1];
    }
    if bytes.is_empty() {
        return Err(err(Graph6ErrorKind::Empty, 0));
    }
    check_printable(bytes)?;

    // Order header.
    let (n, body_start) = if bytes[0] != b'~' {
        (u64::from(bytes[0] - 63), 1)
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(err(Graph6ErrorKind::MalformedHeader, bytes.len()));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = n << 6 | u64::from(b - 63);
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(err(Graph6ErrorKind::MalformedHeader, bytes.len()));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = n << 6 | u64::from(b - 63);
        }
        (n, 8)
    };
    if n as usize > MAX_VERTICES {
        return Err(err(Graph6ErrorKind::TooLarge { n }, 0));
    }
    let n = n as usize;

    let pair_bits = n * n.saturating_sub(1) / 2;
    let expected = pair_bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(err(
            Graph6ErrorKind::Truncated {
                expected,
                got: body.len(),
            },
            bytes.len(),
        ));
    }
    if body.len() > expected {
        return Err(err(Graph6ErrorKind::TrailingBytes, body_start + expected));
    }

    let mut g = Graph::empty(n).map_err(|_| err(Graph6ErrorKind::TooLarge { n: n as u64 }, 0))?;
    let mut bit = 0usize;
    // Column-major upper triangle: column v, rows u < v.
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6];
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(u, v);
            }
            bit += 1;
            if bit == pair_bits {
                break 'outer;
            }
        }
    }
    // Padding bits of the final byte must be zero.
    if pair_bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - pair_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(Graph6ErrorKind::NonzeroPadding, body_start + expected - 1));
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Round-trips a graph index pair ordering used when enumerating all graphs
/// on `n` vertices by code: bit `b` of the code is the pair with column-major
/// index `b`, matching the graph6 bit order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n).expect("small n");
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> bit & 1 == 1 {
                g.set_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// The code of the complement graph under [`graph_from_code`] ordering.
pub fn complement_code(n: usize, code: u64) -> u64 {
    let pair_bits = n * (n - 1) / 2;
    !code & ((1u64 << pair_bits) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::sample_gnp;

    #[test]
    fn k4_encodes_to_c_tilde() {
        // Hand-encoded per the published format: n=4 -> 'C' (63+4); the six
        // upper-triangle bits are all 1 -> 63+63 = '~'. Cross-checked against
        // the format's reference tools.
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(emit_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn single_vertex_is_at_sign() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(emit_graph6(&g), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn known_small_encodings() {
        // Empty graph on 0 vertices.
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        // P_3 = path 0-1-2: pairs (0,1)=1,(0,2)=0,(1,2)=1 -> 101000 -> 40+63 = 'g'.
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&p3), "Bg");
        // C_5 in the standard encoding.
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(parse_graph6(&emit_graph6(&c5)).unwrap(), c5);
    }

    #[test]
    fn roundtrip_random_graphs() {
        for seed in 0..100 {
            let n = 1 + (seed as usize * 7) % 12;
            let g = sample_gnp(n, 0.5, seed).unwrap();
            let text = emit_graph6(&g);
            assert_eq!(parse_graph6(&text).unwrap(), g, "roundtrip failed for seed {seed}");
        }
    }

    #[test]
    fn large_order_header_roundtrip() {
        let g = Graph::empty(100).unwrap();
        let text = emit_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap().n(), 100);
    }

    #[test]
    fn rejects_malformed_inputs() {
        assert_eq!(parse_graph6("").unwrap_err().kind, Graph6ErrorKind::Empty);

        let e = parse_graph6("C").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::Truncated { .. }));

        let e = parse_graph6("C~~").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::TrailingBytes));
        assert_eq!(e.offset, 2);

        // Byte below the printable range, offset reported.
        let e = parse_graph6("C\t").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::InvalidByte { .. }));
        assert_eq!(e.offset, 1);

        // n=2 needs 1 pair bit; '~' = 111111 has nonzero padding beyond bit 0.
        let e = parse_graph6("A~").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::NonzeroPadding));

        let e = parse_graph6("~?").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::MalformedHeader));
    }

    #[test]
    fn tolerates_trailing_newline() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(parse_graph6("C~\n").unwrap(), k4);
        assert_eq!(parse_graph6("C~\r\n").unwrap(), k4);
    }

    #[test]
    fn code_enumeration_matches_graph6_bit_order() {
        // code 0b000001 on 4 vertices sets the first column-major pair (0,1).
        let g = graph_from_code(4, 1);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.edge_count(), 1);
        let comp = complement_code(4, 1);
        let gc = graph_from_code(4, comp);
        assert!(!gc.has_edge(0, 1));
        assert_eq!(gc.edge_count(), 5);
    }
}
