//! graph6 for orders below 63: one order byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per byte,
//! most significant first, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let Some((&first, data)) = bytes.split_first() else {
        return Err(Error::Truncated {
            expected: 1,
            found: 0,
        });
    };
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Error::ByteOutOfRange { byte, offset });
        }
    }
    let n = usize::from(first - OFFSET);
    if n == 63 {
        // 126 introduces the multi-byte order form
        return Err(Error::UnsupportedOrder(n));
    }
    if n == 0 {
        return Err(Error::UnsupportedOrder(0));
    }
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Error::Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Error::TrailingBytes(data.len() - expected));
    }

    let bit = |k: usize| (data[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
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
    Graph::new(n, edges)
}

/// Encodes `g` without header or newline. Orders of 63 and above are not
/// representable in the single-byte form and panic.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63, "graph6 encoder supports n < 63, got {n}");
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
