//! graph6 encoding for graphs on up to 32 vertices.
//!
//! Layout: optional `>>graph6<<` header, one byte `n + 63`, then the upper
//! triangle read column by column (`(i, j)` with `i < j`, `j = 1..n-1`,
//! `i = 0..j-1`) in 6-bit big-endian groups, zero padded, each group + 63.

use crate::error::{NktError, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub const HEADER: &[u8] = b">>graph6<<";

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes exactly one graph; surrounding whitespace is not accepted.
pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let bytes = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| NktError::Parse("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(NktError::Parse(format!("invalid size byte 0x{first:02x}")));
    }
    if first == 126 {
        return Err(NktError::Parse(format!(
            "multi-byte size header: graphs above {MAX_VERTICES} vertices are not supported"
        )));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(NktError::Parse(format!(
            "{n} vertices exceeds the limit of {MAX_VERTICES}"
        )));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(NktError::Parse(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut groups = body.iter().map(|&b| {
        if (63..=126).contains(&b) {
            Ok(b - 63)
        } else {
            Err(NktError::Parse(format!("invalid data byte 0x{b:02x}")))
        }
    });
    let mut group = 0u8;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                group = groups.next().expect("length checked")?;
                left = 6;
            }
            left -= 1;
            if (group >> left) & 1 == 1 {
                g.insert_edge(i, j);
            }
        }
    }
    if group & ((1 << left) - 1) != 0 {
        return Err(NktError::Parse("nonzero padding bits".into()));
    }
    Ok(g)
}

pub fn decode_str(s: &str) -> Result<Graph> {
    decode(s.as_bytes())
}
