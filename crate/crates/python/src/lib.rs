//! Python bindings for the `interval_coloring` crate.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use interval_coloring::{bounds, coloring, construction, io, search};
use interval_coloring::{Color, Edge, EdgeColoring, Graph, Vertex};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_order(order: &str) -> PyResult<search::EdgeOrder> {
    match order {
        "lex" => Ok(search::EdgeOrder::Lexicographic),
        "colex" => Ok(search::EdgeOrder::Colex),
        other => Err(PyValueError::new_err(format!(
            "unknown edge order {other:?}; use 'lex' or 'colex'"
        ))),
    }
}

#[pyclass(name = "Graph", module = "intervalcol", frozen)]
struct PyGraph(Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: u32, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        Graph::from_edges(vertex_count, edges)
            .map(PyGraph)
            .map_err(value_err)
    }

    #[staticmethod]
    fn complete(m: u32) -> PyResult<Self> {
        Graph::complete(m).map(PyGraph).map_err(value_err)
    }

    #[getter]
    fn vertex_count(&self) -> u32 {
        self.0.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.0.edges().iter().map(|e| e.endpoints()).collect()
    }

    fn degree(&self, x: Vertex) -> PyResult<usize> {
        self.0.degree(x).map_err(value_err)
    }

    fn max_degree(&self) -> usize {
        self.0.max_degree()
    }

    fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.0.has_edge(a, b)
    }

    fn is_triangle_free(&self) -> bool {
        self.0.is_triangle_free()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertex_count={}, edge_count={})",
            self.0.vertex_count(),
            self.0.edge_count()
        )
    }
}

#[pyclass(name = "EdgeColoring", module = "intervalcol", frozen)]
struct PyEdgeColoring(EdgeColoring);

#[pymethods]
impl PyEdgeColoring {
    /// `assignment` maps `(i, j)` pairs to colors.
    #[new]
    fn new(span: Color, assignment: BTreeMap<(Vertex, Vertex), Color>) -> PyResult<Self> {
        let pairs = assignment
            .into_iter()
            .map(|((a, b), c)| Edge::new(a, b).map(|e| (e, c)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(value_err)?;
        Ok(PyEdgeColoring(EdgeColoring::from_assignment(span, pairs)))
    }

    #[getter]
    fn span(&self) -> Color {
        self.0.span()
    }

    fn color(&self, a: Vertex, b: Vertex) -> Option<Color> {
        Edge::new(a, b).ok().and_then(|e| self.0.color(e))
    }

    fn colors_used(&self) -> Vec<Color> {
        self.0.colors_used().into_iter().collect()
    }

    fn to_dict(&self) -> BTreeMap<(Vertex, Vertex), Color> {
        self.0.iter().map(|(e, c)| (e.endpoints(), c)).collect()
    }

    fn reflected(&self) -> Self {
        PyEdgeColoring(self.0.reflected())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!(
            "EdgeColoring(span={}, edges={})",
            self.0.span(),
            self.0.len()
        )
    }
}

#[pyclass(name = "IntervalReport", module = "intervalcol", frozen)]
struct PyIntervalReport(coloring::IntervalReport);

#[pymethods]
impl PyIntervalReport {
    #[getter]
    fn verdict(&self) -> bool {
        self.0.verdict()
    }

    /// `(kind, message)` pairs.
    #[getter]
    fn violations(&self) -> Vec<(&'static str, String)> {
        self.0
            .violations
            .iter()
            .map(|v| (v.kind().name(), v.to_string()))
            .collect()
    }

    fn __bool__(&self) -> bool {
        self.0.verdict()
    }

    fn __repr__(&self) -> String {
        format!(
            "IntervalReport(verdict={}, violations={})",
            self.0.verdict(),
            self.0.violations.len()
        )
    }
}

#[pyfunction]
fn construct(n: u32) -> PyResult<PyEdgeColoring> {
    construction::construct(n)
        .map(PyEdgeColoring)
        .map_err(value_err)
}

#[pyfunction]
fn round_robin(n: u32) -> PyResult<PyEdgeColoring> {
    construction::round_robin(n)
        .map(PyEdgeColoring)
        .map_err(value_err)
}

#[pyfunction]
fn classify_edge(n: u32, i: Vertex, j: Vertex) -> PyResult<u8> {
    construction::classify_edge(n, i, j)
        .map(|c| c.get())
        .map_err(value_err)
}

/// `(case, edge_count, min_color, max_color)`.
type CaseRow = (u8, usize, Option<Color>, Option<Color>);

/// One row per case, in case order.
#[pyfunction]
fn case_stats(n: u32) -> PyResult<Vec<CaseRow>> {
    let stats = construction::case_stats(n).map_err(value_err)?;
    Ok(stats
        .into_iter()
        .map(|s| {
            (
                s.case.get(),
                s.edges,
                s.colors.map(|c| c.0),
                s.colors.map(|c| c.1),
            )
        })
        .collect())
}

#[pyfunction]
fn verify_interval(g: &PyGraph, c: &PyEdgeColoring) -> PyIntervalReport {
    PyIntervalReport(coloring::verify_interval(&g.0, &c.0))
}

#[pyfunction]
fn palette(g: &PyGraph, c: &PyEdgeColoring, x: Vertex) -> PyResult<Vec<Color>> {
    coloring::palette(&g.0, &c.0, x)
        .map(|p| p.colors)
        .map_err(value_err)
}

fn report_dict(report: &bounds::BoundsReport) -> BTreeMap<String, Option<u64>> {
    let lower = report.lower.iter().map(|b| ("lower", b));
    let upper = report.upper.iter().map(|b| ("upper", b));
    let mut out: BTreeMap<String, Option<u64>> = lower
        .chain(upper)
        .map(|(side, b)| {
            (
                format!("{side}.{}", b.kind.key()),
                b.value.as_ref().ok().copied(),
            )
        })
        .collect();
    out.insert("best_lower".into(), report.best_lower());
    out.insert("best_upper".into(), report.best_upper());
    out
}

/// Bounds on W(K_2n) as a `{"lower.construction": 7, ...}` dict; inapplicable bounds map to None.
#[pyfunction]
fn bounds_for_k2n(n: u32) -> PyResult<BTreeMap<String, Option<u64>>> {
    bounds::bounds_for_k2n(n)
        .map(|r| report_dict(&r))
        .map_err(value_err)
}

#[pyfunction]
fn bounds_for_graph(g: &PyGraph) -> BTreeMap<String, Option<u64>> {
    report_dict(&bounds::bounds_for_graph(&g.0))
}

/// Returns `(status, nodes_explored, coloring or None)`.
#[pyfunction]
#[pyo3(signature = (g, t, budget = search::DEFAULT_NODE_BUDGET, order = "lex"))]
fn find_interval_coloring(
    py: Python<'_>,
    g: &PyGraph,
    t: Color,
    budget: u64,
    order: &str,
) -> PyResult<(&'static str, u64, Option<PyEdgeColoring>)> {
    let cfg = search::SearchConfig {
        t,
        node_budget: budget,
        edge_order: parse_order(order)?,
    };
    let graph = &g.0;
    let outcome = py
        .detach(|| search::find_interval_coloring(graph, &cfg))
        .map_err(value_err)?;
    let name = outcome.status.name();
    let witness = match outcome.status {
        search::SearchStatus::Found(c) => Some(PyEdgeColoring(c)),
        _ => None,
    };
    Ok((name, outcome.nodes_explored, witness))
}

/// Returns `(w, complete, witness or None)`.
#[pyfunction]
#[pyo3(signature = (g, t_cap = search::MAX_SPAN, budget = search::DEFAULT_NODE_BUDGET, order = "lex"))]
fn compute_w(
    py: Python<'_>,
    g: &PyGraph,
    t_cap: Color,
    budget: u64,
    order: &str,
) -> PyResult<(Color, bool, Option<PyEdgeColoring>)> {
    let order = parse_order(order)?;
    let graph = &g.0;
    let res = py.detach(|| search::compute_w(graph, t_cap, budget, order));
    Ok((res.w, res.complete, res.witness.map(PyEdgeColoring)))
}

#[pyfunction]
fn parse_graph(text: &str) -> PyResult<PyGraph> {
    io::parse_graph(text).map(PyGraph).map_err(value_err)
}

#[pyfunction]
fn emit_graph(g: &PyGraph) -> String {
    io::emit_graph(&g.0)
}

#[pyfunction]
fn parse_coloring(text: &str, g: &PyGraph) -> PyResult<PyEdgeColoring> {
    io::parse_coloring(text, &g.0)
        .map(PyEdgeColoring)
        .map_err(value_err)
}

#[pyfunction]
fn parse_coloring_with_graph(text: &str) -> PyResult<(PyGraph, PyEdgeColoring)> {
    io::parse_coloring_with_graph(text)
        .map(|(g, c)| (PyGraph(g), PyEdgeColoring(c)))
        .map_err(value_err)
}

#[pyfunction]
fn emit_coloring(g: &PyGraph, c: &PyEdgeColoring) -> PyResult<String> {
    io::emit_coloring(&g.0, &c.0).map_err(|e| value_err(format!("edge {e} has no color")))
}

#[pymodule]
pub fn intervalcol(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyEdgeColoring>()?;
    m.add_class::<PyIntervalReport>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(round_robin, m)?)?;
    m.add_function(wrap_pyfunction!(classify_edge, m)?)?;
    m.add_function(wrap_pyfunction!(case_stats, m)?)?;
    m.add_function(wrap_pyfunction!(verify_interval, m)?)?;
    m.add_function(wrap_pyfunction!(palette, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_for_k2n, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_for_graph, m)?)?;
    m.add_function(wrap_pyfunction!(find_interval_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(compute_w, m)?)?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    m.add_function(wrap_pyfunction!(emit_graph, m)?)?;
    m.add_function(wrap_pyfunction!(parse_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(parse_coloring_with_graph, m)?)?;
    m.add_function(wrap_pyfunction!(emit_coloring, m)?)?;
    m.add("DEFAULT_NODE_BUDGET", search::DEFAULT_NODE_BUDGET)?;
    Ok(())
}
