//! Simple undirected graphs with 1-based vertex ids.

use std::fmt;

use thiserror::Error;

/// 1-based vertex id.
pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} is out of range 1..={vertex_count}")]
    VertexOutOfRange { vertex: Vertex, vertex_count: u32 },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
}

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Builds the canonical edge for `{a, b}`. Fails on a loop.
    pub fn new(a: Vertex, b: Vertex) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(a)),
        }
    }

    pub fn lo(self) -> Vertex {
        self.lo
    }

    pub fn hi(self) -> Vertex {
        self.hi
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn touches(self, x: Vertex) -> bool {
        self.lo == x || self.hi == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// An immutable simple graph on vertices `1..=vertex_count`.
///
/// Edges are kept sorted lexicographically, and each vertex keeps a sorted
/// neighbor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: u32,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn from_edges<I>(vertex_count: u32, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut canon = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            canon.push(Edge::new(a, b)?);
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        Ok(Self::from_sorted_unchecked(vertex_count, canon))
    }

    fn from_sorted_unchecked(vertex_count: u32, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count as usize];
        for e in &edges {
            adjacency[(e.lo - 1) as usize].push(e.hi);
            adjacency[(e.hi - 1) as usize].push(e.lo);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges,
            adjacency,
        }
    }

    /// The complete graph K_m.
    pub fn complete(m: u32) -> Result<Self, GraphError> {
        if m == 0 {
            return Err(GraphError::NoVertices);
        }
        let edges = (1..=m)
            .flat_map(|i| (i + 1..=m).map(move |j| Edge { lo: i, hi: j }))
            .collect();
        Ok(Self::from_sorted_unchecked(m, edges))
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.vertex_count
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_vertex(&self, x: Vertex) -> bool {
        (1..=self.vertex_count).contains(&x)
    }

    fn check_vertex(&self, x: Vertex) -> Result<(), GraphError> {
        if self.contains_vertex(x) {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: x,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn neighbors(&self, x: Vertex) -> Result<&[Vertex], GraphError> {
        self.check_vertex(x)?;
        Ok(&self.adjacency[(x - 1) as usize])
    }

    pub fn degree(&self, x: Vertex) -> Result<usize, GraphError> {
        self.neighbors(x).map(<[Vertex]>::len)
    }

    /// Maximum degree Δ; zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.contains_edge(e))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True iff no three vertices are pairwise adjacent.
    pub fn is_triangle_free(&self) -> bool {
        // For each edge (u, v) with u < v, look for a common neighbor w > v.
        // Sorted adjacency lists make this a merge.
        self.edges.iter().all(|e| {
            let nu = &self.adjacency[(e.lo - 1) as usize];
            let nv = &self.adjacency[(e.hi - 1) as usize];
            let (mut a, mut b) = (0, 0);
            while a < nu.len() && b < nv.len() {
                match nu[a].cmp(&nv[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let m = self.vertex_count as usize;
        self.edges.len() == m * (m - 1) / 2
    }
}
