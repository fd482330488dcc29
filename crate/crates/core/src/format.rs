//! Plain-text graph files.
//!
//! ```text
//! # banana with three edges
//! p 2 3
//! e 0 1
//! e 0 1
//! e 0 1
//! ```
//!
//! `p <vertex_count> <edge_count>` comes first, then one `e <u> <v>` line per
//! edge in index order. Vertices are 0-based, `e u u` is a loop, and blank
//! lines and lines starting with `#` are skipped.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(parse_error(
            line,
            format!("expected {N} numbers, found {}", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| parse_error(line, format!("{field:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_error(line, "duplicate `p` header"));
                }
                let [n, m] = numbers(line, &fields[1..])?;
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(parse_error(line, "edge before the `p` header"));
                };
                let [u, v] = numbers(line, &fields[1..])?;
                if u >= n || v >= n {
                    return Err(parse_error(
                        line,
                        format!(
                            "vertex out of range: edge ({u}, {v}) in a graph with {n} vertices"
                        ),
                    ));
                }
                edges.push((u, v));
            }
            other => return Err(parse_error(line, format!("unknown line type {other:?}"))),
        }
    }
    let Some((n, m, line)) = header else {
        return Err(parse_error(
            text.lines().count().max(1),
            "missing `p` header",
        ));
    };
    if edges.len() != m {
        return Err(parse_error(
            line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Multigraph::new(n, edges)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = parse_graph("p 1 1\ne 0 0").unwrap();
        assert_eq!(g.edges(), &[(0, 0)]);

        let g = parse_graph("# banana\n\np 2 3\ne 0 1\ne 0 1\n  e 0 1\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1); 3]);

        let err = parse_graph("p 2 1\ne 0 5").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        assert!(err.to_string().contains("vertex out of range"));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(
            parse_graph("p 2 2\ne 0 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("e 0 1"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p 2 1\nx 0 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p 2 1\ne 0"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p 2 1\ne 0 -1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p 2 0\np 2 0"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn written_graphs_parse_back() {
        let g = Multigraph::new(3, vec![(0, 0), (0, 1), (2, 1), (1, 2)]).unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
