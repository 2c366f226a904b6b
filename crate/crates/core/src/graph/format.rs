//! Plain-text edge list format.
//!
//! ```text
//! # comment
//! n m
//! u v        (or "u v w" for a weighted graph)
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. `u == v` is a loop.

use std::fmt::Write as _;

use super::{Edge, MultiGraph};
use crate::error::{PebbleError, Result};

fn parse_err(line: usize, message: impl Into<String>) -> PebbleError {
    PebbleError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("{what} must be a non-negative integer, got {tok:?}"),
        )
    })
}

pub fn parse_graph(text: &str) -> Result<MultiGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing \"n m\" header"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n_tok, m_tok] = head[..] else {
        return Err(parse_err(header_line, "header must be \"n m\""));
    };
    let n = parse_count(n_tok, header_line, "vertex count")?;
    let m = parse_count(m_tok, header_line, "edge count")?;

    let mut edges = Vec::with_capacity(m);
    let mut weighted = None;
    for (line, body) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let (u, v, weight) = match toks[..] {
            [u, v] => (u, v, None),
            [u, v, w] => {
                let w: f64 = w
                    .parse()
                    .map_err(|_| parse_err(line, format!("bad weight {w:?}")))?;
                if !w.is_finite() {
                    return Err(parse_err(line, format!("weight {w} is not finite")));
                }
                (u, v, Some(w))
            }
            _ => return Err(parse_err(line, "edge line must be \"u v\" or \"u v w\"")),
        };
        match weighted {
            None => weighted = Some(weight.is_some()),
            Some(expected) if expected != weight.is_some() => {
                return Err(parse_err(line, "weighted and unweighted edges are mixed"));
            }
            _ => {}
        }
        let u = parse_count(u, line, "endpoint")?;
        let v = parse_count(v, line, "endpoint")?;
        for x in [u, v] {
            if x >= n {
                return Err(parse_err(
                    line,
                    format!("endpoint {x} out of range for n = {n}"),
                ));
            }
        }
        edges.push(Edge {
            u,
            v,
            weight,
            index: edges.len(),
        });
    }
    if edges.len() != m {
        let last = text.lines().count().max(1);
        return Err(parse_err(
            last,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    MultiGraph::from_edges(n, edges)
}

pub fn serialize_graph(g: &MultiGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        match e.weight {
            Some(w) => {
                let _ = writeln!(out, "{} {} {}", e.u, e.v, w);
            }
            None => {
                let _ = writeln!(out, "{} {}", e.u, e.v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_triangle() {
        let g = parse_graph("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_multiset(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.edges()[2].u, 2);
        assert_eq!(g.edges()[2].index, 2);
    }

    #[test]
    fn parses_loop_and_comments() {
        let g = parse_graph("# a loop\n\n1 1\n  # inner\n0 0\n").unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.edges()[0].is_loop());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_graph("2 1\n0 5").unwrap_err();
        assert!(matches!(err, PebbleError::Parse { line: 2, .. }), "{err:?}");

        let err = parse_graph("# c\n2 -1\n").unwrap_err();
        assert!(matches!(err, PebbleError::Parse { line: 2, .. }), "{err:?}");

        let err = parse_graph("2 2\n0 1\n").unwrap_err();
        assert!(matches!(err, PebbleError::Parse { .. }));

        let err = parse_graph("2 1\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, PebbleError::Parse { line: 3, .. }), "{err:?}");

        let err = parse_graph("2 2\n0 1 1.5\n1 0\n").unwrap_err();
        assert!(matches!(err, PebbleError::Parse { line: 3, .. }), "{err:?}");

        let err = parse_graph("2 1\n0 x\n").unwrap_err();
        assert!(matches!(err, PebbleError::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn weighted_round_trip() {
        let text = "2 2\n0 1 2.5\n1 1 -3\n";
        let g = parse_graph(text).unwrap();
        assert!(g.is_weighted());
        assert_eq!(serialize_graph(&g), text);
    }

    proptest! {
        #[test]
        fn round_trip(
            n in 1usize..10,
            raw in prop::collection::vec((0usize..10, 0usize..10, -1000i32..1000), 0..25),
            weighted in any::<bool>(),
        ) {
            let g = if weighted {
                let t: Vec<_> = raw.iter().map(|&(a, b, w)| (a % n, b % n, w as f64 / 8.0)).collect();
                MultiGraph::from_weighted(n, &t).unwrap()
            } else {
                let p: Vec<_> = raw.iter().map(|&(a, b, _)| (a % n, b % n)).collect();
                MultiGraph::from_pairs(n, &p).unwrap()
            };
            let text = serialize_graph(&g);
            prop_assert_eq!(parse_graph(&text).unwrap(), g);
        }
    }
}
