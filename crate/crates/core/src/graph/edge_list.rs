//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The `n` directive is optional; without it the order is one more than the
//! largest vertex index mentioned.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(Error::parse(line_no, "order directive must come first"));
            }
            if fields.len() != 2 {
                return Err(Error::parse(line_no, "expected `n <order>`"));
            }
            let n = parse_index(fields[1], line_no)?;
            declared = Some((n, line_no));
            continue;
        }
        if fields.len() != 2 {
            return Err(Error::parse(line_no, format!("expected `u v`, got `{line}`")));
        }
        let u = parse_index(fields[0], line_no)?;
        let v = parse_index(fields[1], line_no)?;
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v, line_no));
    }

    let n = match declared {
        Some((n, _)) => n,
        None => edges.iter().map(|&(u, v, _)| u.max(v) + 1).max().unwrap_or(0),
    };
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line_no) in &edges {
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex index {} not below declared order {n}", u.max(v)),
            ));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
        }
    }
    if let Some((n, line_no)) = declared {
        if n > super::MAX_VERTICES {
            return Err(Error::parse(
                line_no,
                format!("order {n} exceeds the supported maximum {}", super::MAX_VERTICES),
            ));
        }
    }
    Graph::new(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

fn parse_index(token: &str, line_no: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line_no, format!("`{token}` is not a vertex index")))
}

/// Canonical form: the order directive, then edges sorted lexicographically.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::hypercube;

    #[test]
    fn smallest_edge() {
        let g = parse("n 2\n0 1").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn order_inferred_without_directive() {
        let g = parse("# a path\n0 1\n\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(parse("").unwrap().n(), 0);
        assert_eq!(parse("n 5").unwrap().m(), 0);
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(
            parse("0 0"),
            Err(Error::Parse {
                line: 1,
                message: "self-loop at vertex 0".into()
            })
        );
        assert!(matches!(parse("n 3\n0 1\n1 0"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("n 3\n0 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("0 1\nfoo"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("0 1 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("0 -1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("0 1\nn 2"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn hypercube_round_trip() {
        let q3 = hypercube(3).unwrap();
        let text = to_edge_list(&q3);
        assert_eq!(text.lines().count(), 13);
        let back = parse(&text).unwrap();
        assert_eq!(back, q3);
        assert_eq!((back.n(), back.m()), (8, 12));
        assert!((0..8).all(|v| back.degree(v) == 3));
    }
}
