//! graph6 encoding/decoding (short form, n <= 62).
//!
//! Format: first byte n + 63, then the upper triangle of the adjacency
//! matrix in column order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...) packed
//! big-endian into 6-bit groups, each + 63, padded with zero bits.

use crate::graph::SimpleGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: unsupported order {0} (supported range 1..=62)")]
    Order(usize),
    #[error("graph6: byte {0:#x} out of printable range 63..=126")]
    Byte(u8),
    #[error("graph6: expected {expected} bytes for n={n}, got {got}")]
    Length { n: usize, expected: usize, got: usize },
    #[error("graph6: nonzero padding bits")]
    Padding,
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn encode(g: &SimpleGraph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n == 0 || n > 62 {
        return Err(Graph6Error::Order(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}

pub fn decode(s: &str) -> Result<SimpleGraph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::Byte(b));
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 || n > 62 {
        return Err(Graph6Error::Order(n));
    }
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            got: bytes.len(),
        });
    }
    let mut g = SimpleGraph::empty(n);
    let nbits = n * (n - 1) / 2;
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6] - 63;
            let bit = (byte >> (5 - idx % 6)) & 1;
            if bit == 1 {
                g = g.with_edge(u, v);
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // remaining pad bits in the final byte must be zero
    if !nbits.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // K_3 <-> "Bw" and C_4 <-> "Cl", worked out by hand from the format
        assert_eq!(encode(&SimpleGraph::complete(3)).unwrap(), "Bw");
        assert_eq!(decode("Bw").unwrap(), SimpleGraph::complete(3));
        assert_eq!(encode(&SimpleGraph::cycle(4)).unwrap(), "Cl");
        assert_eq!(decode("Cl").unwrap(), SimpleGraph::cycle(4));
    }

    #[test]
    fn round_trip_assorted() {
        let graphs = [
            SimpleGraph::empty(1),
            SimpleGraph::empty(7),
            SimpleGraph::complete(10),
            SimpleGraph::complete_bipartite(4, 5),
            SimpleGraph::path(13),
            SimpleGraph::cycle(12),
        ];
        for g in graphs {
            let s = encode(&g).unwrap();
            assert_eq!(decode(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("B"), Err(Graph6Error::Length { .. })));
        assert!(matches!(decode("Bww"), Err(Graph6Error::Length { .. })));
        assert!(matches!(decode("B\x1f"), Err(Graph6Error::Byte(_))));
        // "Bx" has a nonzero pad bit after the 3 triangle bits of n=3
        assert_eq!(decode("Bx"), Err(Graph6Error::Padding));
    }

    #[test]
    fn trailing_newline_ok() {
        assert_eq!(decode("Bw\n").unwrap(), SimpleGraph::complete(3));
    }
}
