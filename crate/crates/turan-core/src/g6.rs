//! graph6 codec, bit exact: header byte `n + 63` for `n <= 62`, else
//! `126` followed by three bytes carrying `n` in 6-bit big-endian
//! chunks; then the upper triangle of the adjacency matrix in column
//! order, six bits per byte offset by 63, padding bits zero.

use crate::graph::{Graph, MAX_VERTICES};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    EmptyInput,
    /// Byte value outside the printable graph6 range at `offset`.
    InvalidByte { offset: usize, byte: u8 },
    /// Header declares an order outside `1..=64`.
    OrderOutOfRange { n: usize },
    /// Fewer data bytes than the declared order requires.
    Truncated { expected: usize, got: usize },
    /// More data bytes than the declared order requires.
    TrailingData { offset: usize },
    /// A padding bit beyond the last triangle bit is set.
    PaddingBitSet { offset: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::EmptyInput => write!(f, "empty graph6 string"),
            Graph6Error::InvalidByte { offset, byte } => {
                write!(f, "invalid graph6 byte 0x{:02x} at offset {}", byte, offset)
            }
            Graph6Error::OrderOutOfRange { n } => {
                write!(f, "graph order {} not in 1..={}", n, MAX_VERTICES)
            }
            Graph6Error::Truncated { expected, got } => {
                write!(f, "truncated graph6 data: expected {} bytes, got {}", expected, got)
            }
            Graph6Error::TrailingData { offset } => {
                write!(f, "trailing graph6 data at offset {}", offset)
            }
            Graph6Error::PaddingBitSet { offset } => {
                write!(f, "nonzero padding bit in byte at offset {}", offset)
            }
        }
    }
}

impl core::error::Error for Graph6Error {}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
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
    // All bytes are in 63..=126, so this is ASCII by construction.
    String::from_utf8(out).unwrap()
}

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::EmptyInput);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset, byte: b });
        }
    }
    let (n, pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n < 1 || n > MAX_VERTICES {
        return Err(Graph6Error::OrderOutOfRange { n });
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated {
            expected: pos + nbytes,
            got: bytes.len(),
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingData {
            offset: pos + nbytes,
        });
    }
    let mut g = Graph::new(n).map_err(|_| Graph6Error::OrderOutOfRange { n })?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + idx / 6] - 63;
            if byte & (1 << (5 - idx % 6)) != 0 {
                g = g.add_edge(i, j).unwrap();
            }
            idx += 1;
        }
    }
    // Remaining bits of the final byte must be zero.
    if nbits > 0 {
        let last = bytes[pos + nbytes - 1] - 63;
        let used = nbits - (nbytes - 1) * 6;
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(Graph6Error::PaddingBitSet {
                offset: pos + nbytes - 1,
            });
        }
    }
    Ok(g)
}
