//! graph6 (no header line) and plain `u v` edge-list text formats.

use super::{bit, Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;

/// Encodes `g` in graph6: size prefix, then the upper triangle column by
/// column, six bits per printable byte.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
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
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

/// Decodes one graph6 string. A single trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
        return Err(GraphError::Graph6Byte(b));
    }
    let (n, body) = match bytes {
        [] => return Err(GraphError::Graph6Header("empty input".into())),
        [126, 126, ..] => {
            return Err(GraphError::Graph6Header(
                "eight-byte size form exceeds the 64-vertex limit".into(),
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphError::Graph6Header("short size field".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |n, &b| (n << 6) | usize::from(b - BIAS));
            (n, &rest[3..])
        }
        [first, rest @ ..] => (usize::from(first - BIAS), rest),
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(GraphError::Graph6Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(GraphError::Graph6Trailing(body.len() - expected));
    }
    let bit_at = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit_at) {
        return Err(GraphError::Graph6Padding);
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_masks(adj))
}

/// Parses `u v` lines (0-indexed); `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| GraphError::EdgeList { line: idx + 1, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(format!("expected two vertex indices, got {:?}", line)));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(format!("bad vertex index {s:?}: {e}")))
        };
        pairs.push((parse(fields[0])?, parse(fields[1])?));
    }
    Graph::from_edge_list(&pairs)
}

pub fn to_edge_list(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|(u, v)| format!("{u} {v}\n"))
        .collect()
}

/// Reads either format: graph6 when the first non-blank line decodes as
/// graph6, otherwise an edge list.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Ok(Graph::default()),
        Some(line) => match parse_graph6(line) {
            Ok(g) => Ok(g),
            Err(_) => parse_edge_list(text),
        },
    }
}
