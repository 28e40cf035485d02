//! The graph6 text format: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use distinguo_core::graph::MAX_VERTICES;
use distinguo_core::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("graph6 parse error at byte {offset}: {message}")]
pub struct Graph6Error {
    pub offset: usize,
    pub message: String,
}

fn err(offset: usize, message: impl Into<String>) -> Graph6Error {
    Graph6Error { offset, message: message.into() }
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let skip = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &line.as_bytes()[skip..];
    if let Some(i) = bytes.iter().position(|&b| !(BIAS..=126).contains(&b)) {
        return Err(err(skip + i, format!("byte {:#04x} is outside the printable range 63..=126", bytes[i])));
    }
    let (n, header_len) = match bytes {
        [] => return Err(err(skip, "empty input")),
        [126, 126, ..] => return Err(err(skip, format!("graphs above {MAX_VERTICES} vertices are not supported"))),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(skip + bytes.len(), "truncated length header"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize);
            if n < 63 {
                return Err(err(skip, format!("long length header encodes {n}, which needs the short form")));
            }
            (n, 4)
        }
        [b, ..] => ((b - BIAS) as usize, 1),
    };
    if n == 0 {
        return Err(err(skip, "graphs need at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(err(skip, format!("{n} vertices, at most {MAX_VERTICES} are supported")));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < need {
        return Err(err(skip + bytes.len(), format!("expected {need} data bytes for {n} vertices, found {}", data.len())));
    }
    if data.len() > need {
        return Err(err(skip + header_len + need, "trailing bytes after the adjacency data"));
    }
    let bit = |k: usize| (data[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if let Some(k) = (bits..need * 6).find(|&k| bit(k)) {
        return Err(err(skip + header_len + k / 6, "nonzero padding bit"));
    }
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
    Graph::from_edges(n, &edges).map_err(|e| err(skip, e.to_string()))
}

/// The graph6 line of `g`, without a newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

/// Parses a graph6 file: one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim_end()).map_err(|e| (i + 1, e)))
        .collect()
}
