//! graph6 text format: compact ASCII serialization of undirected simple
//! graphs, one graph per line.
//!
//! Supports the short order field (n <= 62) and the 3-byte extended field
//! (n <= 258047). The upper triangle of the adjacency matrix is packed in
//! column order x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups, each
//! offset by 63 into the printable range `?`..`~`.

use thiserror::Error;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_LONG: usize = 258_047;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("graph order {0} exceeds the supported maximum {MAX_LONG}")]
    OrderTooLarge(usize),
    #[error("empty input")]
    Empty,
    #[error("invalid byte {byte:#04x} at offset {offset}: expected printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated input at offset {offset}: expected {expected} adjacency bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("trailing data at offset {0}")]
    TrailingData(usize),
    #[error("nonzero padding bits in final byte at offset {0}")]
    NonzeroPadding(usize),
}

/// Encodes a graph as a graph6 string (no trailing newline).
pub fn graph6_encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + OFFSET);
    } else if n <= MAX_LONG {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    } else {
        return Err(Graph6Error::OrderTooLarge(n));
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 line (without newline). Errors carry the byte offset
/// of the offending position.
pub fn graph6_decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset, byte: b });
        }
    }

    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                offset: bytes.len(),
                expected: 4,
                found: bytes.len(),
            });
        }
        // An 8-byte order field (`~~`) would encode n > 258047, beyond scope.
        if bytes[1] == 126 {
            return Err(Graph6Error::OrderTooLarge(MAX_LONG + 1));
        }
        let n = (((bytes[1] - OFFSET) as usize) << 12)
            | (((bytes[2] - OFFSET) as usize) << 6)
            | ((bytes[3] - OFFSET) as usize);
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let found = bytes.len() - header_len;
    if found < body_len {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: body_len,
            found,
        });
    }
    if found > body_len {
        return Err(Graph6Error::TrailingData(header_len + body_len));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[header_len + bit_index / 6] - OFFSET;
            let bit = (byte >> (5 - (bit_index % 6))) & 1;
            if bit == 1 {
                edges.push((u, v));
            }
            bit_index += 1;
            if bit_index == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 && body_len > 0 {
        let last = bytes[header_len + body_len - 1] - OFFSET;
        let pad = 6 - (bits % 6);
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding(header_len + body_len - 1));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edge list is simple by construction"))
}

/// Parses a multi-line graph6 file body; blank lines are skipped. Errors are
/// reported per line (1-based) alongside the in-line byte offset.
pub fn graph6_decode_lines(body: &str) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    body.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| (i + 1, graph6_decode(line.trim_end())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, fan_apex, path_graph};

    // Hand-packed reference strings for fixed small graphs.
    #[test]
    fn known_encodings() {
        assert_eq!(graph6_encode(&complete_graph(3).unwrap()).unwrap(), "Bw");
        assert_eq!(graph6_encode(&complete_graph(5).unwrap()).unwrap(), "D~{");
        assert_eq!(graph6_encode(&cycle_graph(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(graph6_encode(&path_graph(2).unwrap()).unwrap(), "A_");
        assert_eq!(graph6_encode(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(graph6_encode(&Graph::empty(0)).unwrap(), "?");
    }

    #[test]
    fn decode_known() {
        assert_eq!(graph6_decode("Bw").unwrap(), complete_graph(3).unwrap());
        assert_eq!(graph6_decode("D~{").unwrap(), complete_graph(5).unwrap());
        assert_eq!(graph6_decode("Dhc").unwrap(), cycle_graph(5).unwrap());
    }

    #[test]
    fn fan_apex_round_trip_is_identity() {
        let g = fan_apex(10).unwrap();
        let s = graph6_encode(&g).unwrap();
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn extended_order_field() {
        let g = path_graph(100).unwrap();
        let s = graph6_encode(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(graph6_decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(graph6_decode(""), Err(Graph6Error::Empty));
        assert_eq!(
            graph6_decode("B\x20"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: 0x20 })
        );
        assert_eq!(
            graph6_decode("D~"),
            Err(Graph6Error::Truncated {
                offset: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(graph6_decode("Bwww"), Err(Graph6Error::TrailingData(2)));
        // C4 uses 6 bits exactly; flipping an unused low bit of K3's byte is padding
        assert_eq!(graph6_decode("Bx"), Err(Graph6Error::NonzeroPadding(1)));
    }

    #[test]
    fn decode_lines_skips_blanks() {
        let body = "Bw\n\nD~{\n";
        let parsed = graph6_decode_lines(body);
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].0, 1);
        assert_eq!(parsed[1].0, 3);
        assert!(parsed.iter().all(|(_, r)| r.is_ok()));
    }
}
