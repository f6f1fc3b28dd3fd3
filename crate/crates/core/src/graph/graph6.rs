//! graph6 encoding: size header, then the upper triangle column by column,
//! six bits per byte offset by 63.

use super::{Graph, GraphError, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(skip + pos, format!("byte {:#04x} outside the printable range 63..=126", bytes[pos])));
    }
    let (n, header_len) = match bytes {
        [] => return Err(err(skip, "empty line")),
        [126, 126, ..] => {
            // 8-byte form is only used for n >= 258048
            return Err(err(skip, "vertex count exceeds 64"));
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(skip + bytes.len(), "truncated 4-byte size header"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(err(skip, format!("vertex count {n} exceeds 64")));
    }
    if n == 0 {
        return Err(err(skip, "graph has no vertices"));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(err(skip + bytes.len(), format!("truncated body: expected {expected} bytes, found {}", data.len())));
    }
    if data.len() > expected {
        return Err(err(skip + header_len + expected, "trailing bytes after body"));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(skip + header_len + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
