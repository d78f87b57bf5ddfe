//! graph6 text encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * (n - 1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(b'~');
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.extend_from_slice(b"~~");
        push_sextets(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn push_sextets(out: &mut Vec<u8>, x: u64, count: usize) {
    for k in (0..count).rev() {
        out.push(((x >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn decode(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s).as_bytes();
    if s.is_empty() {
        return Err(Error::Graph6("empty line".into()));
    }
    if let Some(&bad) = s.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {bad:#04x} outside the printable range 63..=126")));
    }
    let sextets = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    let (n, body) = if s[0] != b'~' {
        ((s[0] - 63) as usize, &s[1..])
    } else if s.len() >= 2 && s[1] == b'~' {
        if s.len() < 8 {
            return Err(Error::Graph6("truncated 8-byte size header".into()));
        }
        (sextets(&s[2..8]), &s[8..])
    } else {
        if s.len() < 4 {
            return Err(Error::Graph6("truncated 4-byte size header".into()));
        }
        (sextets(&s[1..4]), &s[4..])
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("bit payload for n = {n} needs {expected} bytes, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

/// Reads every graph from a graph6 stream, one per nonblank line.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t == HEADER {
            continue;
        }
        let g = decode(t).map_err(|e| match e {
            Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", lineno + 1)),
            other => other,
        })?;
        out.push(g.with_label(t.to_string()));
    }
    Ok(out)
}
