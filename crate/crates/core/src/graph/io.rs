//! Edge-list and graph6 text formats.
//!
//! Edge-list (canonical):
//!
//! ```text
//! # optional comments
//! p <vertex_count> <edge_count>
//! e <u> <v>
//! ...
//! ```
//!
//! Vertices are 0-based and the serializer always writes `u < v` in edge-id
//! order, so edge ids survive a round trip.

use std::fmt::Write as _;

use super::{Graph, GraphError, ParseError};

fn parse_err(line: usize, byte: Option<usize>, message: impl Into<String>) -> GraphError {
    GraphError::Parse(ParseError {
        line,
        byte,
        message: message.into(),
    })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let mut number = |what: &str| -> Result<usize, GraphError> {
            let tok = fields
                .next()
                .ok_or_else(|| parse_err(line_no, None, format!("missing {what}")))?;
            let byte = raw.find(tok);
            tok.parse::<usize>()
                .map_err(|_| parse_err(line_no, byte, format!("invalid {what} {tok:?}")))
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, None, "duplicate header line"));
                }
                let n = number("vertex count")?;
                let m = number("edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) =
                    header.ok_or_else(|| parse_err(line_no, None, "edge line before header"))?;
                let u = number("vertex")?;
                let v = number("vertex")?;
                for x in [u, v] {
                    if x >= n {
                        return Err(GraphError::VertexOutOfRange {
                            vertex: x,
                            vertex_count: n,
                        });
                    }
                }
                pairs.push((u, v));
            }
            other => {
                return Err(parse_err(
                    line_no,
                    raw.find(other),
                    format!("unknown line type {other:?}"),
                ))
            }
        }
        if fields.next().is_some() {
            return Err(parse_err(line_no, None, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, None, "missing \"p <n> <m>\" header"))?;
    if pairs.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            None,
            format!("header declares {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, pairs)
}

fn graph6_size_prefix(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes one graph as a graph6 string (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    graph6_size_prefix(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. `line_no` is used only for error positions.
pub fn parse_graph6_line(line: &str, line_no: usize) -> Result<Graph, GraphError> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                line_no,
                Some(i),
                format!("byte {b} outside graph6 range"),
            ));
        }
    }
    let digits = |from: usize, count: usize| -> Result<usize, GraphError> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| parse_err(line_no, Some(bytes.len()), "truncated size prefix"))?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, start) = match bytes {
        [] => return Err(parse_err(line_no, Some(0), "empty graph6 line")),
        [126, 126, ..] => (digits(2, 6)?, 8),
        [126, ..] => (digits(1, 3)?, 4),
        [b, ..] => ((*b - 63) as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            line_no,
            Some(bytes.len().min(expected)),
            format!(
                "expected {expected} bytes for {n} vertices, got {}",
                bytes.len()
            ),
        ));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let b = bytes[start + k / 6] - 63;
            if (b >> (5 - k % 6)) & 1 == 1 {
                pairs.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(parse_err(
                line_no,
                Some(expected - 1),
                "nonzero padding bits",
            ));
        }
    }
    Graph::new(n, pairs)
}

/// Decodes one graph per non-empty line.
pub fn parse_graph6(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l.trim(), i + 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use proptest::prelude::*;

    #[test]
    fn parses_edge_list() {
        let g = parse_edge_list("p 3 2\ne 0 1\ne 1 2").unwrap();
        assert_eq!(g, Family::Path(3).build().unwrap());
        let g = parse_edge_list("# comment\n\np 3 1\n# more\ne 2 1\n").unwrap();
        assert_eq!(g.edges(), &[(1, 2)]);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            parse_edge_list("p 3 1\ne 0 3"),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                vertex_count: 3
            })
        );
        assert_eq!(
            parse_edge_list("p 3 1\ne 1 1"),
            Err(GraphError::LoopEdge(1))
        );
        let cases = [
            "e 0 1",
            "p 3 2\ne 0 1",
            "p 3 1\ne 0 x",
            "p 3\n",
            "p 3 1\nq 1 2",
            "p 2 1\ne 0 1 5",
        ];
        for c in cases {
            assert!(
                matches!(parse_edge_list(c), Err(GraphError::Parse(_))),
                "{c:?}"
            );
        }
        match parse_edge_list("p 3 1\ne 0 x") {
            Err(GraphError::Parse(p)) => assert_eq!((p.line, p.byte), (2, Some(4))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn graph6_known_strings() {
        let g = parse_graph6_line("D?{", 1).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(to_graph6(&g), "D?{");
        // K4 is "C~", P3 (0-1-2) is "Bg"
        assert_eq!(to_graph6(&Family::Complete(4).build().unwrap()), "C~");
        assert_eq!(to_graph6(&Family::Path(3).build().unwrap()), "Bg");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6_line("?", 1).unwrap().vertex_count(), 0);
    }

    #[test]
    fn graph6_multi_line_and_errors() {
        let gs = parse_graph6("C~\n\nBg\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert!(parse_graph6_line("C", 3).is_err());
        assert!(parse_graph6_line("C~~", 1).is_err());
        assert!(parse_graph6_line("B\x10", 1).is_err());
        // P2 uses one bit; the remaining five padding bits must be zero
        assert!(parse_graph6_line("A_", 1).is_ok());
        assert!(parse_graph6_line("A`", 1).is_err());
    }

    #[test]
    fn graph6_large_prefix() {
        let g = Family::Cycle(70).build().unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        let back = parse_graph6_line(&s, 1).unwrap();
        assert_eq!(back.edge_count(), 70);
        assert_eq!(to_graph6(&back), s);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            (
                Just(pairs),
                proptest::collection::vec(any::<bool>(), len),
                Just(n),
            )
                .prop_map(|(pairs, keep, n)| {
                    Graph::new(n, pairs.into_iter().zip(keep).filter(|p| p.1).map(|p| p.0)).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(g in arb_graph()) {
            let text = to_edge_list(&g);
            prop_assert_eq!(parse_edge_list(&text).unwrap(), g.clone());
        }

        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = to_graph6(&g);
            let back = parse_graph6_line(&s, 1).unwrap();
            prop_assert_eq!(to_graph6(&back), s);
            prop_assert_eq!(back.edge_count(), g.edge_count());
            for &(u, v) in g.edges() {
                prop_assert!(back.has_edge(u, v));
            }
        }
    }
}
