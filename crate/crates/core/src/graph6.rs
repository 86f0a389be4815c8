//! graph6 encoding and decoding.
//!
//! A line is `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per
//! byte and offset by 63. The optional `>>graph6<<` header is accepted on
//! input and never written. Padding bits in the final byte must be zero.

use crate::error::{Graph6Error, Graph6ErrorKind};
use crate::graph::{bit, Graph, MAX_VERTICES};

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` as a single graph6 line without a trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbor_set(j);
        for i in 0..j {
            acc = (acc << 1) | u8::from(col & bit(i) != 0);
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 line. Trailing `\r`/`\n` are ignored.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    decode_bytes(line.as_bytes())
}

pub fn decode_bytes(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut end = input.len();
    while end > 0 && matches!(input[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let input = &input[..end];
    let start = if input.starts_with(HEADER.as_bytes()) {
        HEADER.len()
    } else {
        0
    };
    let mut pos = start;

    let next = |pos: &mut usize| -> Result<u64, Graph6Error> {
        let b = *input.get(*pos).ok_or_else(|| {
            Graph6Error::new(
                *pos,
                Graph6ErrorKind::Truncated {
                    expected: *pos + 1,
                    found: input.len(),
                },
            )
        })?;
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::new(*pos, Graph6ErrorKind::InvalidByte(b)));
        }
        *pos += 1;
        Ok(u64::from(b - BIAS))
    };

    if input.len() == start {
        return Err(Graph6Error::new(start, Graph6ErrorKind::Empty));
    }
    let first = next(&mut pos)?;
    let n = if first < 63 {
        first
    } else {
        let second = next(&mut pos)?;
        let digits = if second == 63 {
            6
        } else {
            pos -= 1;
            3
        };
        let mut n = 0u64;
        for _ in 0..digits {
            n = (n << 6) | next(&mut pos)?;
        }
        n
    };
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::new(start, Graph6ErrorKind::TooManyVertices(n)));
    }
    let n = n as usize;

    let body_start = pos;
    let expected = body_start + body_len(n);
    if input.len() < expected {
        return Err(Graph6Error::new(
            input.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: input.len(),
            },
        ));
    }
    let mut adj = vec![0u64; n];
    let mut bits_left = 0;
    let mut word = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bits_left == 0 {
                word = next(&mut pos)?;
                bits_left = 6;
            }
            bits_left -= 1;
            if (word >> bits_left) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    if bits_left > 0 && word & ((1 << bits_left) - 1) != 0 {
        return Err(Graph6Error::new(pos - 1, Graph6ErrorKind::NonzeroPadding));
    }
    if pos != input.len() {
        return Err(Graph6Error::new(pos, Graph6ErrorKind::TrailingData));
    }
    Ok(Graph::from_adjacency(adj))
}
