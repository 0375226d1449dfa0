//! The graph6 text format, restricted to the single-byte size header
//! (order at most 62).

use crate::error::{Error, Graph6Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest order encodable with a single size byte.
pub const MAX_GRAPH6_ORDER: usize = 62;

const BIAS: u8 = 63;

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 record. An optional `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();

    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=126).contains(&b))
    {
        return Err(Graph6Error::InvalidByte { position, byte }.into());
    }
    let (&size, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if size == 126 {
        return Err(Graph6Error::UnsupportedOrder(MAX_GRAPH6_ORDER + 1).into());
    }
    let n = usize::from(size - BIAS);
    if n == 0 {
        return Err(Graph6Error::MalformedLength(size).into());
    }

    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: payload.len(),
        }
        .into());
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData(payload.len() - expected).into());
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    let get = |k: usize| (payload[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    for j in 1..n {
        for i in 0..j {
            if get(bit) {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    if (bit..expected * 6).any(get) {
        return Err(Graph6Error::NonzeroPadding.into());
    }
    Ok(g)
}

/// Canonical graph6 encoding without header or line terminator.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6(Graph6Error::UnsupportedOrder(n)));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(BIAS + n as u8);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(BIAS + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (chunk << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
