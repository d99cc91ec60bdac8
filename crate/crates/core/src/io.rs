//! graph6 and edge-list formats.

use crate::{Graph, GraphError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

fn perr(location: String, message: impl Into<String>) -> GraphError {
    GraphError::Parse { location, message: message.into() }
}

/// Decodes one graph in McKay's graph6 format. An optional `>>graph6<<`
/// header and trailing whitespace are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
    }
    while let [rest @ .., last] = bytes {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(perr(format!("byte {i}"), format!("invalid graph6 byte {b:#x}")));
        }
    }
    let (n, body) = match bytes {
        [] => return Err(perr("byte 0".into(), "empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(perr("byte 2".into(), "truncated 36-bit vertex count"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(perr("byte 1".into(), "truncated 18-bit vertex count"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let header = bytes.len() - body.len();
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(perr(
            format!("byte {}", header + body.len().min(need)),
            format!("expected {need} adjacency bytes for n = {n}, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[need - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(perr(format!("byte {}", header + need - 1), "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// One `u v` pair per line, 0-based. `#` starts a comment. A line holding a
/// single integer declares the vertex count, which otherwise defaults to one
/// more than the largest index used.
pub fn parse_edge_list(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| perr(format!("byte {}", e.valid_up_to()), "not UTF-8"))?;
    let mut declared: Option<usize> = None;
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let nums: Vec<usize> = body
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| perr(format!("line {line}"), format!("bad vertex index {t:?}"))))
            .collect::<Result<_>>()?;
        match nums.as_slice() {
            [n] if declared.is_none() && pairs.is_empty() => declared = Some(*n),
            [u, v] => pairs.push((*u, *v, line)),
            _ => return Err(perr(format!("line {line}"), "expected `u v`")),
        }
    }
    let n = declared.unwrap_or_else(|| pairs.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0));
    let mut g = Graph::empty(n);
    for (u, v, line) in pairs {
        g.add_edge_checked(u, v, Some(line))?;
    }
    g.finish();
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
