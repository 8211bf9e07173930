//! graph6 and the plain edge-list format.
//!
//! graph6 layout: one size byte `n + 63` (only `n <= 62` is accepted here),
//! then the upper triangle of the adjacency matrix read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed big-endian into 6-bit groups,
//! each group offset by 63. Padding bits must be zero.
//!
//! Edge lists: first non-blank line is `n`, every following non-blank line
//! is `u v`. Lines starting with `#` are comments.

use super::Graph;
use crate::error::{Error, Result};

const MAX_GRAPH6_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| g6_err("empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(g6_err(format!("character {:?} out of range", first as char)));
    }
    if first == 126 {
        // Long header: `~` followed by three bytes (or `~~` and six).
        if body.len() < 3 {
            return Err(g6_err("truncated header"));
        }
        return Err(g6_err(format!(
            "graphs with more than {MAX_GRAPH6_ORDER} vertices are not supported"
        )));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} data characters for n={n}, found {}",
            body.len()
        )));
    }
    let mut groups = Vec::with_capacity(body.len());
    for &c in body {
        if !(63..=126).contains(&c) {
            return Err(g6_err(format!("character {:?} out of range", c as char)));
        }
        groups.push(c - 63);
    }
    let bit = |k: usize| (groups[k / 6] >> (5 - k % 6)) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(g6_err("trailing padding bits are nonzero"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Panics if the graph has more than 62 vertices.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_GRAPH6_ORDER,
        "graph6 output supports at most {MAX_GRAPH6_ORDER} vertices"
    );
    let bits = n * n.saturating_sub(1) / 2;
    let mut groups = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                groups[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(groups.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(groups.into_iter().map(|b| (b + 63) as char));
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses an edge list. `line_offset` is added to reported line numbers so
/// callers embedding an edge list in a larger file get absolute positions.
pub(crate) fn parse_edge_list_at(text: &str, line_offset: usize) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1 + line_offset, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(line_offset + 1, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first_line, format!("invalid vertex count {header:?}")))?;
    let mut g = Graph::empty(n);
    for (lineno, line) in lines {
        let mut fields = line.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = fields
                .next()
                .ok_or_else(|| parse_err(lineno, "expected two vertices"))?;
            tok.parse()
                .map_err(|_| parse_err(lineno, format!("invalid vertex {tok:?}")))
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if fields.next().is_some() {
            return Err(parse_err(lineno, "expected two vertices"));
        }
        g.add_edge(u, v)
            .map_err(|e| parse_err(lineno, e.to_string()))?;
    }
    Ok(g)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_at(text, 0)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Accepts either format: text whose first meaningful line is a bare integer
/// is an edge list, anything else is graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.parse::<usize>().is_ok() => parse_edge_list(text),
        Some(l) => parse_graph6(l),
        None => Err(g6_err("empty input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graph6_hand_decoded() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        // petgraph's reference encoding of 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("~"), Err(Error::Graph6(m)) if m.contains("truncated")));
        assert!(matches!(parse_graph6("~??~"), Err(Error::Graph6(m)) if m.contains("62")));
        // n=2 has one data bit; 'A' sets a padding bit.
        assert!(matches!(parse_graph6("AA"), Err(Error::Graph6(m)) if m.contains("padding")));
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D???").is_err());
        assert!(parse_graph6("D?\x7f").is_err());
        assert!(parse_graph6(" ").is_err());
    }

    #[test]
    fn graph6_accepts_header_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("3\n0 1\n1 2").unwrap(), Graph::path(3));
        assert_eq!(parse_edge_list("4\n").unwrap(), Graph::empty(4));
        let err = parse_edge_list("2\n0 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, ref message } if message.contains("self-loop")));
        let err = parse_edge_list("3\n0 1\n\n1 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, ref message } if message.contains("duplicate")));
        assert!(matches!(parse_edge_list("3\n0 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("x"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn auto_detect() {
        assert_eq!(parse_graph("# P3\n3\n0 1\n1 2\n").unwrap(), Graph::path(3));
        assert_eq!(parse_graph("A_\n").unwrap(), Graph::complete(2));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut g = Graph::empty(n);
                    let mut k = 0;
                    for v in 1..n {
                        for u in 0..v {
                            if bits[k] {
                                g.add_edge(u, v).unwrap();
                            }
                            k += 1;
                        }
                    }
                    g
                },
            )
        })
    }

    proptest! {
        #[test]
        fn graph6_roundtrip(g in arb_graph(62)) {
            let s = emit_graph6(&g);
            prop_assert_eq!(emit_graph6(&parse_graph6(&s).unwrap()), s.clone());
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
        }

        #[test]
        fn edge_list_roundtrip(g in arb_graph(20)) {
            prop_assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        }
    }
}
