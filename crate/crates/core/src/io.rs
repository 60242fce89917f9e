//! Line-oriented text formats for graphs and colorings.
//!
//! Graph file:
//!
//! ```text
//! p <vertex_count> <edge_count>
//! e <i> <j>
//! ```
//!
//! Coloring file:
//!
//! ```text
//! c <vertex_count> <span>
//! e <i> <j> <color>
//! ```
//!
//! Vertex ids are 1-based. Tokens are separated by whitespace, blank lines
//! and lines starting with `#` are skipped. Emitters write edges in
//! lexicographic order with `i < j` and end every line with `\n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing header")]
    MissingHeader,
    #[error("malformed header, expected `{0}`")]
    MalformedHeader(&'static str),
    #[error("malformed line, expected `{0}`")]
    MalformedLine(&'static str),
    #[error("vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange { vertex: Vertex, vertex_count: u32 },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("header declares {declared} edges, found {found}")]
    CountMismatch { declared: usize, found: usize },
    #[error("header declares {declared} vertices, graph has {actual}")]
    VertexCountMismatch { declared: u32, actual: u32 },
    #[error("color {color} out of range 1..={span}")]
    ColorOutOfRange { color: Color, span: Color },
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("edge {0} has no color")]
    MissingEdge(Edge),
}

const GRAPH_HEADER: &str = "p <vertex_count> <edge_count>";
const GRAPH_EDGE: &str = "e <i> <j>";
const COLORING_HEADER: &str = "c <vertex_count> <span>";
const COLORING_EDGE: &str = "e <i> <j> <color>";

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Non-comment lines as `(1-based line number, tokens)`.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#'))
            .then(|| (idx + 1, line.split_whitespace().collect()))
    })
}

/// Parses `tag n1 n2 ...` with exactly `N` positive-or-zero numbers.
fn numbers<const N: usize>(tokens: &[&str], tag: &str) -> Option<[u32; N]> {
    if tokens.len() != N + 1 || tokens[0] != tag {
        return None;
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(&tokens[1..]) {
        *slot = tok.parse().ok()?;
    }
    Some(out)
}

fn edge_at(line: usize, a: Vertex, b: Vertex, vertex_count: u32) -> Result<Edge, ParseError> {
    for v in [a, b] {
        if v == 0 || v > vertex_count {
            return Err(err(
                line,
                ParseErrorKind::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                },
            ));
        }
    }
    Edge::new(a, b).map_err(|_| err(line, ParseErrorKind::Loop(a)))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut recs = records(text);
    let (header_line, header) = recs.next().ok_or(err(1, ParseErrorKind::MissingHeader))?;
    let [vertex_count, declared] =
        numbers::<2>(&header, "p")
            .filter(|[v, _]| *v > 0)
            .ok_or(err(
                header_line,
                ParseErrorKind::MalformedHeader(GRAPH_HEADER),
            ))?;

    let mut seen = BTreeMap::new();
    for (line, tokens) in recs {
        let [a, b] = numbers::<2>(&tokens, "e")
            .ok_or(err(line, ParseErrorKind::MalformedLine(GRAPH_EDGE)))?;
        let e = edge_at(line, a, b, vertex_count)?;
        if seen.insert(e, line).is_some() {
            return Err(err(line, ParseErrorKind::DuplicateEdge(e)));
        }
    }
    if seen.len() != declared as usize {
        return Err(err(
            header_line,
            ParseErrorKind::CountMismatch {
                declared: declared as usize,
                found: seen.len(),
            },
        ));
    }
    Ok(
        Graph::from_edges(vertex_count, seen.keys().map(|e| e.endpoints()))
            .expect("edges validated while parsing"),
    )
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "e {} {}", e.lo(), e.hi()).unwrap();
    }
    out
}

struct RawColoring {
    header_line: usize,
    vertex_count: u32,
    span: Color,
    colors: BTreeMap<Edge, Color>,
    lines: BTreeMap<Edge, usize>,
}

fn parse_coloring_raw(text: &str) -> Result<RawColoring, ParseError> {
    let mut recs = records(text);
    let (header_line, header) = recs.next().ok_or(err(1, ParseErrorKind::MissingHeader))?;
    let [vertex_count, span] = numbers::<2>(&header, "c")
        .filter(|[v, t]| *v > 0 && *t > 0)
        .ok_or(err(
            header_line,
            ParseErrorKind::MalformedHeader(COLORING_HEADER),
        ))?;

    let mut colors = BTreeMap::new();
    let mut lines = BTreeMap::new();
    for (line, tokens) in recs {
        let [a, b, color] = numbers::<3>(&tokens, "e")
            .ok_or(err(line, ParseErrorKind::MalformedLine(COLORING_EDGE)))?;
        let e = edge_at(line, a, b, vertex_count)?;
        if color == 0 || color > span {
            return Err(err(line, ParseErrorKind::ColorOutOfRange { color, span }));
        }
        if colors.insert(e, color).is_some() {
            return Err(err(line, ParseErrorKind::DuplicateEdge(e)));
        }
        lines.insert(e, line);
    }
    Ok(RawColoring {
        header_line,
        vertex_count,
        span,
        colors,
        lines,
    })
}

/// Parses a coloring of `g`. Every edge of `g` must be colored exactly once
/// and no other pair may appear.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<EdgeColoring, ParseError> {
    let raw = parse_coloring_raw(text)?;
    if raw.vertex_count != g.vertex_count() {
        return Err(err(
            raw.header_line,
            ParseErrorKind::VertexCountMismatch {
                declared: raw.vertex_count,
                actual: g.vertex_count(),
            },
        ));
    }
    if let Some((&e, &line)) = raw
        .lines
        .iter()
        .filter(|(e, _)| !g.contains_edge(**e))
        .min_by_key(|(_, l)| **l)
    {
        return Err(err(line, ParseErrorKind::UnknownEdge(e)));
    }
    if let Some(&e) = g.edges().iter().find(|e| !raw.colors.contains_key(e)) {
        return Err(err(raw.header_line, ParseErrorKind::MissingEdge(e)));
    }
    Ok(EdgeColoring::from_assignment(raw.span, raw.colors))
}

/// Parses a coloring and takes its graph to be exactly the listed edges.
pub fn parse_coloring_with_graph(text: &str) -> Result<(Graph, EdgeColoring), ParseError> {
    let raw = parse_coloring_raw(text)?;
    let g = Graph::from_edges(raw.vertex_count, raw.colors.keys().map(|e| e.endpoints()))
        .expect("edges validated while parsing");
    Ok((g, EdgeColoring::from_assignment(raw.span, raw.colors)))
}

/// Writes `c` as a coloring file over the edges of `g`.
///
/// Fails with the first edge of `g` that has no color.
pub fn emit_coloring(g: &Graph, c: &EdgeColoring) -> Result<String, Edge> {
    let mut out = format!("c {} {}\n", g.vertex_count(), c.span());
    for &e in g.edges() {
        let color = c.color(e).ok_or(e)?;
        writeln!(out, "e {} {} {}", e.lo(), e.hi(), color).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{construct, round_robin};

    fn kind(r: Result<Graph, ParseError>) -> (usize, ParseErrorKind) {
        let e = r.unwrap_err();
        (e.line, e.kind)
    }

    #[test]
    fn parse_small_graphs() {
        assert_eq!(
            parse_graph("p 2 1\ne 1 2").unwrap(),
            Graph::complete(2).unwrap()
        );
        let k4 = "p 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4";
        assert_eq!(parse_graph(k4).unwrap(), Graph::complete(4).unwrap());
        let commented = "# K_2\n\np 2 1\n  # edge\ne 2 1\n";
        assert_eq!(parse_graph(commented).unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn graph_parse_errors() {
        let e12 = Edge::new(1, 2).unwrap();
        assert_eq!(
            kind(parse_graph("p 2 1\ne 1 2\ne 1 2")),
            (3, ParseErrorKind::DuplicateEdge(e12))
        );
        assert_eq!(kind(parse_graph("")), (1, ParseErrorKind::MissingHeader));
        assert_eq!(
            kind(parse_graph("x 2 1\n")),
            (1, ParseErrorKind::MalformedHeader(GRAPH_HEADER))
        );
        assert_eq!(
            kind(parse_graph("p 0 0\n")),
            (1, ParseErrorKind::MalformedHeader(GRAPH_HEADER))
        );
        assert_eq!(
            kind(parse_graph("p 2 1\ne 1 3\n")),
            (
                2,
                ParseErrorKind::VertexOutOfRange {
                    vertex: 3,
                    vertex_count: 2
                }
            )
        );
        assert_eq!(
            kind(parse_graph("p 2 1\ne 2 2\n")),
            (2, ParseErrorKind::Loop(2))
        );
        assert_eq!(
            kind(parse_graph("# c\np 3 2\ne 1 2\n")),
            (
                2,
                ParseErrorKind::CountMismatch {
                    declared: 2,
                    found: 1
                }
            )
        );
        assert_eq!(
            kind(parse_graph("p 3 1\ne 1 two\n")),
            (2, ParseErrorKind::MalformedLine(GRAPH_EDGE))
        );
    }

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_edges(5, [(4, 5), (1, 3), (2, 5)]).unwrap();
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
        assert_eq!(emit_graph(&g), "p 5 3\ne 1 3\ne 2 5\ne 4 5\n");
    }

    #[test]
    fn emit_constructed() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            emit_coloring(&k2, &construct(1).unwrap()).unwrap(),
            "c 2 1\ne 1 2 1\n"
        );
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            emit_coloring(&k4, &construct(2).unwrap()).unwrap(),
            "c 4 4\ne 1 2 1\ne 1 3 2\ne 1 4 3\ne 2 3 3\ne 2 4 2\ne 3 4 4\n"
        );
        let rr = emit_coloring(&k4, &round_robin(2).unwrap()).unwrap();
        assert!(rr.starts_with("c 4 3\n"));
        assert_eq!(rr.lines().count(), 7);
    }

    #[test]
    fn emit_rejects_partial_colorings() {
        let k4 = Graph::complete(4).unwrap();
        let c = EdgeColoring::from_assignment(4, [(Edge::new(1, 2).unwrap(), 1)]);
        assert_eq!(emit_coloring(&k4, &c), Err(Edge::new(1, 3).unwrap()));
    }

    #[test]
    fn k6_round_trip() {
        let k6 = Graph::complete(6).unwrap();
        let text = emit_coloring(&k6, &construct(3).unwrap()).unwrap();
        let parsed = parse_coloring(&text, &k6).unwrap();
        assert_eq!(emit_coloring(&k6, &parsed).unwrap(), text);
        let (g, c) = parse_coloring_with_graph(&text).unwrap();
        assert_eq!(g, k6);
        assert_eq!(c, parsed);
    }

    #[test]
    fn coloring_parse_errors() {
        let k4 = Graph::complete(4).unwrap();
        let good = "c 4 4\ne 1 2 1\ne 1 3 2\ne 1 4 3\ne 2 3 3\ne 2 4 2\ne 3 4 4\n";
        assert!(parse_coloring(good, &k4).is_ok());

        let zero = good.replace("e 2 4 2", "e 2 4 0");
        let e = parse_coloring(&zero, &k4).unwrap_err();
        assert_eq!(
            (e.line, e.kind),
            (6, ParseErrorKind::ColorOutOfRange { color: 0, span: 4 })
        );

        let missing = good.replace("e 3 4 4\n", "");
        let e = parse_coloring(&missing, &k4).unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::MissingEdge(Edge::new(3, 4).unwrap())
        );

        let path = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let e = parse_coloring(good, &path).unwrap_err();
        assert_eq!(
            (e.line, e.kind),
            (3, ParseErrorKind::UnknownEdge(Edge::new(1, 3).unwrap()))
        );

        let k5 = Graph::complete(5).unwrap();
        let e = parse_coloring(good, &k5).unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::VertexCountMismatch {
                declared: 4,
                actual: 5
            }
        );

        let e = parse_coloring("c 4 0\n", &k4).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MalformedHeader(COLORING_HEADER));
    }
}
