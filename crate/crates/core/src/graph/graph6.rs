//! graph6 codec: size header `N(n)` followed by the upper triangle in column-major
//! order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte, each byte
//! offset by 63.

use super::{Graph, GraphBuilder, GraphError};

const HEADER: &[u8] = b">>graph6<<";

fn size_header(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
}

pub(super) fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    size_header(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn err(offset: usize, message: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        message: message.into(),
    }
}

pub(super) fn decode(input: &[u8]) -> Result<Graph, GraphError> {
    let mut body = input;
    while let Some((&last, rest)) = body.split_last() {
        if last == b'\n' || last == b'\r' {
            body = rest;
        } else {
            break;
        }
    }
    let base = if body.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &body[base..];
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(base + pos, format!("byte {} outside 63..=126", bytes[pos])));
    }
    let six = |i: usize| -> Result<usize, GraphError> {
        bytes
            .get(i)
            .map(|b| (b - 63) as usize)
            .ok_or_else(|| err(base + i, "truncated size header"))
    };
    let (n, start) = match bytes.first() {
        None => return Err(err(base, "empty record")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0usize;
            for i in 2..8 {
                n = (n << 6) | six(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0usize;
            for i in 1..4 {
                n = (n << 6) | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let mut builder = GraphBuilder::new(n)?;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let have = bytes.len() - start;
    if have != needed {
        return Err(err(
            base + start + have.min(needed),
            format!("expected {needed} adjacency bytes for n = {n}, found {have}"),
        ));
    }
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                builder.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(builder.build())
}
