//! The graph6 line format.
//!
//! A graph6 line is a header encoding the vertex count followed by the upper
//! triangle of the adjacency matrix, read column by column — the pair order
//! is (0,1), (0,2), (1,2), (0,3), ... — packed six bits per printable byte.
//! Every byte is offset by 63, so valid bytes are `?`..`~` (63..=126).
//!
//! Headers come in three sizes; this module implements the one-byte form for
//! `n <= 62` and the four-byte `~`-prefixed form for `n <= 258047`, and
//! rejects the eight-byte form for astronomically large graphs outright.
//! Encoding always picks the shortest header, and the parser insists on it,
//! so encode and parse are mutually inverse byte for byte.

use crate::graph::Graph;
use thiserror::Error;

/// Bias added to every payload byte.
const OFFSET: u8 = 63;
/// Largest vertex count of the one-byte header.
const SMALL_MAX: usize = 62;
/// Largest vertex count of the four-byte header.
const LARGE_MAX: usize = 258_047;

/// Errors produced while parsing or encoding graph6 lines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    /// The header is missing, uses an unsupported form, or spells a small
    /// vertex count in the long form.
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    /// A body byte falls outside the printable range 63..=126.
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range")]
    ByteOutOfRange { pos: usize, byte: u8 },
    /// The body has fewer bytes than the vertex count requires.
    #[error("graph6 body truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    /// The body has more bytes than the vertex count requires.
    #[error("trailing bytes after graph6 body: expected {expected} bytes, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    /// Padding bits at the end of the body must be zero.
    #[error("nonzero padding bits at the end of the graph6 body")]
    NonzeroPadding,
    /// The graph is too large for the supported header forms.
    #[error("graph of order {0} exceeds the supported graph6 range")]
    GraphTooLarge(usize),
}

/// Parses one graph6 line (no trailing newline) into a graph.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    let (n, body) = parse_header(bytes)?;
    let bits = n * (n.saturating_sub(1)) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            expected,
            found: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut pos = 0usize; // bit cursor over the upper triangle
    for (idx, &byte) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { pos: idx, byte });
        }
        let payload = byte - OFFSET;
        for shift in (0..6).rev() {
            let bit = (payload >> shift) & 1;
            if pos >= bits {
                if bit != 0 {
                    return Err(Graph6Error::NonzeroPadding);
                }
            } else if bit == 1 {
                edges.push(pair_at(pos));
            }
            pos += 1;
        }
    }
    Ok(Graph::build(n, &edges).expect("triangle positions are valid edges"))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    let mut out = Vec::new();
    if n <= SMALL_MAX {
        out.push(n as u8 + OFFSET);
    } else if n <= LARGE_MAX {
        out.push(b'~');
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        return Err(Graph6Error::GraphTooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut byte = 0u8;
    let mut filled = 0u32;
    for pos in 0..bits {
        let (i, j) = pair_at(pos);
        byte <<= 1;
        byte |= u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(byte + OFFSET);
            byte = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        byte <<= 6 - filled;
        out.push(byte + OFFSET);
    }
    Ok(String::from_utf8(out).expect("all bytes printable"))
}

/// Splits off the header, returning the vertex count and the body bytes.
fn parse_header(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::MalformedHeader("empty line".into()));
    };
    if first == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(Graph6Error::MalformedHeader(
                "eight-byte headers are not supported".into(),
            ));
        }
        let Some(digits) = bytes.get(1..4) else {
            return Err(Graph6Error::MalformedHeader(
                "long header needs three bytes after '~'".into(),
            ));
        };
        let mut n = 0usize;
        for &d in digits {
            if !(OFFSET..=126).contains(&d) {
                return Err(Graph6Error::MalformedHeader(format!(
                    "header byte {d:#04x} outside the graph6 range"
                )));
            }
            n = (n << 6) | usize::from(d - OFFSET);
        }
        if n <= SMALL_MAX {
            return Err(Graph6Error::MalformedHeader(format!(
                "order {n} must use the one-byte header"
            )));
        }
        Ok((n, &bytes[4..]))
    } else if (OFFSET..=OFFSET + SMALL_MAX as u8).contains(&first) {
        Ok((usize::from(first - OFFSET), &bytes[1..]))
    } else {
        Err(Graph6Error::MalformedHeader(format!(
            "header byte {first:#04x} outside the graph6 range"
        )))
    }
}

/// The vertex pair of upper-triangle bit position `pos` in column order:
/// position p covers pair (i, j) where j is the largest value with
/// j(j-1)/2 <= p and i = p - j(j-1)/2.
fn pair_at(pos: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= pos {
        j += 1;
    }
    (pos - j * (j - 1) / 2, j)
}
