//! Edge-list and colouring file formats.
//!
//! Edge lists: the first content line is `n m`, followed by `m` lines `u v`
//! with 0-based endpoints. Blank lines and lines starting with `#` are skipped.

use std::io::Write;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::RankedColouring;

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields.next().ok_or_else(|| parse_err(line_no, "expected two integers"))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("'{tok}' is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two integers"));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "missing 'n m' header"))?;
    let (n, m) = two_numbers(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line_no, line) in lines {
        let (u, v) = two_numbers(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Writes `g` as an edge list, optionally preceded by `# header`.
pub fn write_edge_list<W: Write>(mut out: W, g: &Graph, header: Option<&str>) -> std::io::Result<()> {
    if let Some(h) = header {
        writeln!(out, "# {h}")?;
    }
    writeln!(out, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

#[derive(Deserialize)]
struct ColouringDoc {
    colours: Vec<usize>,
}

/// Reads a colouring for an `n`-vertex graph: either a JSON object with a
/// `colours` array, or whitespace-separated integers.
pub fn parse_colouring(text: &str, n: usize) -> Result<RankedColouring> {
    let colours = if text.trim_start().starts_with('{') {
        serde_json::from_str::<ColouringDoc>(text)?.colours
    } else {
        let mut out = Vec::new();
        for (line_no, line) in content_lines(text) {
            for tok in line.split_whitespace() {
                out.push(
                    tok.parse()
                        .map_err(|_| parse_err(line_no, format!("'{tok}' is not a colour")))?,
                );
            }
        }
        out
    };
    if colours.len() != n {
        return Err(Error::ColouringLength {
            expected: n,
            got: colours.len(),
        });
    }
    RankedColouring::new(colours)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse_edge_list("# triangle\n\n3 3\n0 1\n1 2\n# middle\n0 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("2 1\na b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("3 2\n0 1\n\n1 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }));
        let err = parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn writes_round_trip() {
        let g = Graph::grid(2, 3);
        let mut buf = Vec::new();
        write_edge_list(&mut buf, &g, Some("{\"family\":\"grid\"}")).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# {\"family\""));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn colouring_formats() {
        assert_eq!(parse_colouring("1 2\n3\n", 3).unwrap().colours(), &[1, 2, 3]);
        assert_eq!(parse_colouring("{\"colours\": [2, 1], \"n\": 2}", 2).unwrap().colours(), &[2, 1]);
        assert!(matches!(parse_colouring("1 2", 3), Err(Error::ColouringLength { .. })));
        assert!(matches!(parse_colouring("1 0", 2), Err(Error::Uncoloured { vertex: 1 })));
    }
}
