//! Text formats: graph6 (single-byte size range only) and plain edge lists.

use crate::graph::{Graph, GraphError, Vertex};

/// Largest order representable with a single graph6 size byte.
pub const GRAPH6_MAX_ORDER: usize = 62;

fn g6err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Parses a graph6 string. Surrounding whitespace is ignored; the optional
/// `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&size, payload) = bytes.split_first().ok_or_else(|| g6err("empty input"))?;
    if !(63..=63 + GRAPH6_MAX_ORDER as u8).contains(&size) {
        return Err(g6err(format!(
            "malformed length byte {size:#04x} (only orders 0..={GRAPH6_MAX_ORDER} are supported)"
        )));
    }
    let n = (size - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(g6err(format!(
            "truncated payload: expected {expected} bytes, found {}",
            payload.len()
        )));
    }
    if payload.len() > expected {
        return Err(g6err(format!(
            "trailing data: expected {expected} bytes, found {}",
            payload.len()
        )));
    }
    let mut sextets = Vec::with_capacity(expected);
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(g6err(format!("payload byte {b:#04x} out of range")));
        }
        sextets.push(b - 63);
    }
    let bit = |k: usize| (sextets[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(g6err("non-canonical padding (nonzero pad bits)"));
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
    Graph::new(n, edges, None)
}

/// Emits the canonical graph6 string of `g` (no header, no newline).
pub fn emit_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_ORDER {
        return Err(g6err(format!(
            "order {n} exceeds the supported maximum {GRAPH6_MAX_ORDER}"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut sextets = vec![0u8; bits.div_ceil(6)];
    for &(u, v) in g.edges() {
        // u < v; column-major upper triangle
        let k = v * (v - 1) / 2 + u;
        sextets[k / 6] |= 1 << (5 - k % 6);
    }
    let mut out = String::with_capacity(1 + sextets.len());
    out.push((n as u8 + 63) as char);
    out.extend(sextets.into_iter().map(|s| (s + 63) as char));
    Ok(out)
}

fn elerr(msg: impl Into<String>) -> GraphError {
    GraphError::EdgeList(msg.into())
}

/// Parses `"n m"` followed by `m` pairs `"u v"`. Tokens are whitespace separated;
/// lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut tokens = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace);
    let mut next = |what: &str| -> Result<Option<usize>, GraphError> {
        tokens
            .next()
            .map(|t| {
                t.parse::<usize>().map_err(|_| {
                    elerr(format!(
                        "{what}: expected a non-negative integer, found {t:?}"
                    ))
                })
            })
            .transpose()
    };
    let n = next("vertex count")?.ok_or_else(|| elerr("missing header \"n m\""))?;
    let m = next("edge count")?.ok_or_else(|| elerr("missing edge count in header"))?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    for i in 0..m {
        let u = next("edge endpoint")?;
        let v = next("edge endpoint")?;
        match (u, v) {
            (Some(u), Some(v)) => edges.push((u, v)),
            (Some(_), None) => return Err(elerr(format!("edge {i} has only one endpoint"))),
            _ => return Err(elerr(format!("header announces {m} edges, found {i}"))),
        }
    }
    if next("trailing token")?.is_some() {
        return Err(elerr(format!("more than the announced {m} edges")));
    }
    Graph::new(n, edges, None)
}

/// Emits `"n m"` then one `"u v"` line per edge in edge order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses either format: a single whitespace-free token is read as graph6,
/// anything else as an edge list.
pub fn parse_graph_auto(text: &str) -> Result<Graph, GraphError> {
    let t = text.trim();
    if !t.is_empty() && !t.contains(char::is_whitespace) && !t.bytes().all(|b| b.is_ascii_digit()) {
        parse_graph6(t)
    } else {
        parse_edge_list(t)
    }
}
