//! The graph6 interchange format, restricted to the single-byte size field
//! (`n <= 62`).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian into
//! 6-bit groups, zero padded, each group offset by 63.

use thiserror::Error;

use crate::graph::{bit, Graph};

/// Largest order expressible with a one-byte size field.
pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("order {0} needs the multi-byte size field, which is not supported")]
    UnsupportedOrder(usize),
    #[error("truncated: expected {expected} data bytes, found {found} (offset {offset})")]
    Truncated {
        expected: usize,
        found: usize,
        offset: usize,
    },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("unexpected trailing byte at offset {offset}")]
    TrailingBytes { offset: usize },
}

impl Graph6Error {
    /// Byte offset the error refers to, when there is one.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            Graph6Error::Empty | Graph6Error::UnsupportedOrder(_) => Some(0),
            Graph6Error::ByteOutOfRange { offset, .. }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::NonzeroPadding { offset }
            | Graph6Error::TrailingBytes { offset } => Some(offset),
        }
    }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

pub fn decode(s: &[u8]) -> Result<Graph, Graph6Error> {
    if let Some((offset, &byte)) = s.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    let (&head, data) = s.split_first().ok_or(Graph6Error::Empty)?;
    let n = (head - 63) as usize;
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: data.len(),
            offset: s.len(),
        });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            offset: 1 + expected,
        });
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - total_bits;
    if pad > 0 {
        let last = data[expected - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: expected });
        }
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = data[k / 6] - 63;
            if group & (0b10_0000 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Decodes a string, tolerating surrounding whitespace and the optional
/// `>>graph6<<` header.
pub fn decode_str(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    decode(s.as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_encodings() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        // bits 101 001 -> 41 + 63 = 'h'
        assert_eq!(encode(&p4).unwrap(), "Ch");
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
        let c6 =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(encode(&c6).unwrap(), "EhEG");
        assert_eq!(encode(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(encode(&Graph::empty(1).unwrap()).unwrap(), "@");
    }

    #[test]
    fn decode_c5_round_trip() {
        let c5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(decode(encode(&c5).unwrap().as_bytes()).unwrap(), c5);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode(b""), Err(Graph6Error::Empty));
        assert_eq!(
            decode(b"C h"),
            Err(Graph6Error::ByteOutOfRange {
                offset: 1,
                byte: b' '
            })
        );
        assert!(matches!(
            decode(b"E"),
            Err(Graph6Error::Truncated {
                expected: 3,
                found: 0,
                ..
            })
        ));
        // P4 is "Ch"; "Ci" sets a padding-free bit, but n=4 has exactly 6 bits, so test n=3.
        // n=3 has 3 data bits and 3 padding bits: '@'+1 = 'A' sets the last padding bit.
        assert_eq!(
            decode(b"BA"),
            Err(Graph6Error::NonzeroPadding { offset: 1 })
        );
        assert_eq!(
            decode(b"Chh"),
            Err(Graph6Error::TrailingBytes { offset: 2 })
        );
        assert_eq!(decode(b"~"), Err(Graph6Error::UnsupportedOrder(63)));
        assert_eq!(decode_str(">>graph6<<Ch\n").unwrap().m(), 3);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=10, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut s = seed;
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let text = encode(&g).unwrap();
            prop_assert_eq!(decode(text.as_bytes()).unwrap(), g);
        }
    }
}
