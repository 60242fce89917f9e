//! Edge colorings and the interval-coloring verifier.
//!
//! A proper coloring with colors `1..=t` is *interval* when every color is
//! used on some edge and the colors at each vertex `x` form a block of
//! `deg(x)` consecutive integers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Vertex};

pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("edge {0} has no color")]
    EdgeUncolored(Edge),
}

/// An assignment of colors to edges together with its declared span `t`.
///
/// The assignment is not checked against the span or any graph when it is
/// built; [`verify_interval`] reports every discrepancy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    span: Color,
    colors: BTreeMap<Edge, Color>,
}

impl EdgeColoring {
    pub fn new(span: Color) -> Self {
        EdgeColoring {
            span,
            colors: BTreeMap::new(),
        }
    }

    pub fn from_assignment<I>(span: Color, assignment: I) -> Self
    where
        I: IntoIterator<Item = (Edge, Color)>,
    {
        EdgeColoring {
            span,
            colors: assignment.into_iter().collect(),
        }
    }

    pub fn span(&self) -> Color {
        self.span
    }

    /// Sets the color of `edge`, returning the previous one.
    pub fn set(&mut self, edge: Edge, color: Color) -> Option<Color> {
        self.colors.insert(edge, color)
    }

    pub fn color(&self, edge: Edge) -> Option<Color> {
        self.colors.get(&edge).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Colored edges in lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// The exact set of colors appearing on edges.
    pub fn colors_used(&self) -> BTreeSet<Color> {
        self.colors.values().copied().collect()
    }

    /// Maps every color `c` to `t + 1 - c`.
    ///
    /// Colors outside `1..=t` stay outside it.
    pub fn reflected(&self) -> EdgeColoring {
        let span = self.span;
        let colors = self
            .colors
            .iter()
            .map(|(&e, &c)| (e, if c > span { 0 } else { span + 1 - c }))
            .collect();
        EdgeColoring { span, colors }
    }
}

/// The sorted distinct colors at one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPalette {
    pub vertex: Vertex,
    pub colors: Vec<Color>,
}

impl VertexPalette {
    /// True for an empty palette or a run of consecutive integers.
    pub fn is_consecutive(&self) -> bool {
        match (self.colors.first(), self.colors.last()) {
            (Some(&lo), Some(&hi)) => (hi - lo) as usize + 1 == self.colors.len(),
            _ => true,
        }
    }
}

/// Sorted distinct colors on the edges at `x`.
pub fn palette(g: &Graph, c: &EdgeColoring, x: Vertex) -> Result<VertexPalette, ColoringError> {
    let mut colors = Vec::with_capacity(g.degree(x)?);
    for &y in g.neighbors(x)? {
        let e = Edge::new(x, y)?;
        colors.push(c.color(e).ok_or(ColoringError::EdgeUncolored(e))?);
    }
    colors.sort_unstable();
    colors.dedup();
    Ok(VertexPalette { vertex: x, colors })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    NotProper,
    NotConsecutive,
    ColorUnused,
    ColorOutOfRange,
    EdgeUncolored,
    ForeignEdge,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::NotProper => "NotProper",
            ViolationKind::NotConsecutive => "NotConsecutive",
            ViolationKind::ColorUnused => "ColorUnused",
            ViolationKind::ColorOutOfRange => "ColorOutOfRange",
            ViolationKind::EdgeUncolored => "EdgeUncolored",
            ViolationKind::ForeignEdge => "ForeignEdge",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two or more edges at `vertex` share `color`.
    NotProper {
        vertex: Vertex,
        color: Color,
    },
    /// The (proper, fully colored) palette at `vertex` is not a run of
    /// `degree` consecutive colors.
    NotConsecutive {
        vertex: Vertex,
        min: Color,
        max: Color,
        degree: usize,
    },
    ColorUnused {
        color: Color,
    },
    ColorOutOfRange {
        edge: Edge,
        color: Color,
    },
    EdgeUncolored {
        edge: Edge,
    },
    /// The coloring assigns a color to a pair that is not an edge of the graph.
    ForeignEdge {
        edge: Edge,
    },
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::NotProper { .. } => ViolationKind::NotProper,
            Violation::NotConsecutive { .. } => ViolationKind::NotConsecutive,
            Violation::ColorUnused { .. } => ViolationKind::ColorUnused,
            Violation::ColorOutOfRange { .. } => ViolationKind::ColorOutOfRange,
            Violation::EdgeUncolored { .. } => ViolationKind::EdgeUncolored,
            Violation::ForeignEdge { .. } => ViolationKind::ForeignEdge,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotProper { vertex, color } => {
                write!(f, "NotProper vertex {vertex}: color {color} repeats")
            }
            Violation::NotConsecutive {
                vertex,
                min,
                max,
                degree,
            } => write!(
                f,
                "NotConsecutive vertex {vertex}: colors span {min}..={max} but degree is {degree}"
            ),
            Violation::ColorUnused { color } => write!(f, "ColorUnused color {color}"),
            Violation::ColorOutOfRange { edge, color } => {
                write!(f, "ColorOutOfRange edge {edge}: color {color}")
            }
            Violation::EdgeUncolored { edge } => write!(f, "EdgeUncolored edge {edge}"),
            Violation::ForeignEdge { edge } => write!(f, "ForeignEdge edge {edge}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalReport {
    pub violations: Vec<Violation>,
}

impl IntervalReport {
    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_kind(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

/// Checks `c` against the interval-coloring definition on `g`.
///
/// All violations are collected. The consecutiveness check only runs at
/// vertices that are proper and fully colored, since any other vertex
/// already carries a more specific violation.
pub fn verify_interval(g: &Graph, c: &EdgeColoring) -> IntervalReport {
    let mut violations = Vec::new();
    let n = g.vertex_count() as usize;
    let mut at_vertex: Vec<Vec<Color>> = vec![Vec::new(); n];
    let mut uncolored_at = vec![false; n];

    for &e in g.edges() {
        match c.color(e) {
            Some(col) => {
                at_vertex[(e.lo() - 1) as usize].push(col);
                at_vertex[(e.hi() - 1) as usize].push(col);
            }
            None => {
                violations.push(Violation::EdgeUncolored { edge: e });
                uncolored_at[(e.lo() - 1) as usize] = true;
                uncolored_at[(e.hi() - 1) as usize] = true;
            }
        }
    }

    let mut used = vec![false; c.span() as usize + 1];
    for (e, col) in c.iter() {
        if !g.contains_edge(e) {
            violations.push(Violation::ForeignEdge { edge: e });
            continue;
        }
        if col == 0 || col > c.span() {
            violations.push(Violation::ColorOutOfRange {
                edge: e,
                color: col,
            });
        } else {
            used[col as usize] = true;
        }
    }

    for (idx, colors) in at_vertex.iter_mut().enumerate() {
        let vertex = idx as Vertex + 1;
        colors.sort_unstable();
        let mut proper = true;
        for w in colors.chunk_by(|a, b| a == b).filter(|run| run.len() > 1) {
            proper = false;
            violations.push(Violation::NotProper {
                vertex,
                color: w[0],
            });
        }
        if !proper || uncolored_at[idx] {
            continue;
        }
        if let (Some(&min), Some(&max)) = (colors.first(), colors.last()) {
            let degree = colors.len();
            if (max - min) as usize + 1 != degree {
                violations.push(Violation::NotConsecutive {
                    vertex,
                    min,
                    max,
                    degree,
                });
            }
        }
    }

    violations.extend(
        (1..=c.span())
            .filter(|&col| !used[col as usize])
            .map(|color| Violation::ColorUnused { color }),
    );

    IntervalReport { violations }
}
