//! Lower and upper bounds on W(G), the largest span of an interval edge
//! coloring of G.
//!
//! Lower bounds are only known here for K_2n: `3n - 2` (witnessed by
//! [`construct`](crate::construction::construct)) and the weaker
//! `2n - 1 + floor(log2(2n - 1))`. Upper bounds hold for every interval
//! colorable graph: `2|V| - 3` when G has an edge, `2|V| - 4` when
//! `|V| >= 3`, and `|V| - 1` when G is triangle-free.
//!
//! Membership in the class of interval colorable graphs and the chromatic
//! index are not computed. For K_2n both are settled by
//! [`round_robin`](crate::construction::round_robin), a `(2n - 1)`-span
//! interval coloring, which also shows χ′(K_2n) = Δ(K_2n).

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("n must be at least 1")]
    ZeroN,
    #[error("the 2|V|-3 bound needs a graph with at least one edge")]
    NoEdges,
    #[error("the 2|V|-4 bound needs at least 3 vertices, got {0}")]
    TooFewVertices(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `3n - 2` for K_2n.
    Construction,
    /// `2n - 1 + floor(log2(2n - 1))` for K_2n.
    Logarithmic,
    /// `2|V| - 4`, needs `|V| >= 3`.
    TwiceOrderMinusFour,
    /// `2|V| - 3`, needs an edge.
    TwiceOrderMinusThree,
    /// `|V| - 1`, needs a triangle-free graph.
    TriangleFree,
}

impl BoundKind {
    /// Stable key used in machine-readable output.
    pub fn key(self) -> &'static str {
        match self {
            BoundKind::Construction => "construction",
            BoundKind::Logarithmic => "logarithmic",
            BoundKind::TwiceOrderMinusFour => "twice_order_minus_4",
            BoundKind::TwiceOrderMinusThree => "twice_order_minus_3",
            BoundKind::TriangleFree => "triangle_free",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            BoundKind::Construction => "3n-2",
            BoundKind::Logarithmic => "2n-1+floor(log2(2n-1))",
            BoundKind::TwiceOrderMinusFour => "2|V|-4",
            BoundKind::TwiceOrderMinusThree => "2|V|-3",
            BoundKind::TriangleFree => "|V|-1",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

/// `floor(log2(k))` from the position of the highest set bit.
pub fn floor_log2(k: u64) -> u32 {
    assert!(k > 0, "log2 of zero");
    u64::BITS - 1 - k.leading_zeros()
}

/// `W(K_2n) >= 3n - 2`.
pub fn construction_lower(n: u64) -> Result<u64, BoundsError> {
    if n == 0 {
        return Err(BoundsError::ZeroN);
    }
    Ok(3 * n - 2)
}

/// `W(K_2n) >= 2n - 1 + floor(log2(2n - 1))`.
pub fn logarithmic_lower(n: u64) -> Result<u64, BoundsError> {
    if n == 0 {
        return Err(BoundsError::ZeroN);
    }
    let d = 2 * n - 1;
    Ok(d + floor_log2(d) as u64)
}

/// `W(G) <= 2|V| - 3` for interval colorable G with at least one edge.
pub fn twice_order_minus_three_upper(g: &Graph) -> Result<u64, BoundsError> {
    if g.edge_count() == 0 {
        return Err(BoundsError::NoEdges);
    }
    Ok(2 * g.vertex_count() as u64 - 3)
}

/// `W(G) <= 2|V| - 4` for interval colorable G with `|V| >= 3`.
pub fn twice_order_minus_four_upper(g: &Graph) -> Result<u64, BoundsError> {
    if g.vertex_count() < 3 {
        return Err(BoundsError::TooFewVertices(g.vertex_count()));
    }
    Ok(2 * g.vertex_count() as u64 - 4)
}

/// `W(G) <= |V| - 1` for interval colorable triangle-free G; `None` otherwise.
pub fn triangle_free_upper(g: &Graph) -> Option<u64> {
    g.is_triangle_free().then(|| g.vertex_count() as u64 - 1)
}

/// The tightest applicable upper bound, or `None` for an edgeless graph.
pub fn best_upper(g: &Graph) -> Option<u64> {
    [
        twice_order_minus_three_upper(g).ok(),
        twice_order_minus_four_upper(g).ok(),
        triangle_free_upper(g),
    ]
    .into_iter()
    .flatten()
    .min()
}

/// One bound evaluated against a graph; `Err` carries why it does not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub kind: BoundKind,
    pub value: Result<u64, String>,
}

impl BoundEntry {
    pub fn applicable(&self) -> bool {
        self.value.is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    /// Human label of the graph, e.g. `K_6`.
    pub subject: String,
    pub lower: Vec<BoundEntry>,
    pub upper: Vec<BoundEntry>,
}

impl BoundsReport {
    pub fn best_lower(&self) -> Option<u64> {
        self.lower
            .iter()
            .filter_map(|b| b.value.as_ref().ok().copied())
            .max()
    }

    pub fn best_upper(&self) -> Option<u64> {
        self.upper
            .iter()
            .filter_map(|b| b.value.as_ref().ok().copied())
            .min()
    }

    pub fn get(&self, kind: BoundKind) -> Option<&BoundEntry> {
        self.lower
            .iter()
            .chain(&self.upper)
            .find(|b| b.kind == kind)
    }

    /// Aligned table followed by a `key=value` block.
    pub fn render(&self) -> String {
        let mut out = format!("W({}) bounds\n", self.subject);
        let rows = self
            .lower
            .iter()
            .map(|b| ("lower", b))
            .chain(self.upper.iter().map(|b| ("upper", b)));
        let width = BoundKind::Logarithmic.formula().len();
        for (side, b) in rows.clone() {
            let value = match &b.value {
                Ok(v) => v.to_string(),
                Err(why) => format!("n/a ({why})"),
            };
            out += &format!("  {side}  {:<width$}  {value}\n", b.kind.formula());
        }
        let show = |v: Option<u64>| v.map_or_else(|| "none".to_string(), |v| v.to_string());
        out += &format!(
            "  best lower {}, best upper {}\n",
            show(self.best_lower()),
            show(self.best_upper())
        );
        out += "\n[bounds]\n";
        out += &format!("subject={}\n", self.subject);
        for (side, b) in rows {
            let value = b
                .value
                .as_ref()
                .map_or_else(|_| "na".to_string(), |v| v.to_string());
            out += &format!("{side}.{}={value}\n", b.kind.key());
        }
        out += &format!("best_lower={}\n", show(self.best_lower()));
        out += &format!("best_upper={}\n", show(self.best_upper()));
        out
    }
}

fn upper_entries(g: &Graph) -> Vec<BoundEntry> {
    vec![
        BoundEntry {
            kind: BoundKind::TwiceOrderMinusFour,
            value: twice_order_minus_four_upper(g).map_err(|_| "needs |V| >= 3".to_string()),
        },
        BoundEntry {
            kind: BoundKind::TwiceOrderMinusThree,
            value: twice_order_minus_three_upper(g).map_err(|_| "needs an edge".to_string()),
        },
        BoundEntry {
            kind: BoundKind::TriangleFree,
            value: triangle_free_upper(g).ok_or_else(|| "graph has a triangle".to_string()),
        },
    ]
}

/// All bounds for K_2n.
pub fn bounds_for_k2n(n: u32) -> Result<BoundsReport, BoundsError> {
    if n == 0 {
        return Err(BoundsError::ZeroN);
    }
    let g = Graph::complete(2 * n).expect("2n >= 2");
    Ok(BoundsReport {
        subject: format!("K_{}", 2 * n),
        lower: vec![
            BoundEntry {
                kind: BoundKind::Construction,
                value: Ok(construction_lower(n as u64)?),
            },
            BoundEntry {
                kind: BoundKind::Logarithmic,
                value: Ok(logarithmic_lower(n as u64)?),
            },
        ],
        upper: upper_entries(&g),
    })
}

/// All bounds for an arbitrary graph. The K_2n lower bounds apply only when
/// `g` is complete of even order.
pub fn bounds_for_graph(g: &Graph) -> BoundsReport {
    let order = g.vertex_count();
    let half = (g.is_complete() && order.is_multiple_of(2)).then_some(order as u64 / 2);
    let lower = [BoundKind::Construction, BoundKind::Logarithmic]
        .into_iter()
        .map(|kind| {
            let value = match (kind, half) {
                (BoundKind::Construction, Some(n)) => Ok(3 * n - 2),
                (_, Some(n)) => Ok(logarithmic_lower(n).expect("n >= 1")),
                (_, None) => Err("graph is not K_2n".to_string()),
            };
            BoundEntry { kind, value }
        })
        .collect();
    let subject = match half {
        Some(_) => format!("K_{order}"),
        None => format!("G(|V|={order}, |E|={})", g.edge_count()),
    };
    BoundsReport {
        subject,
        lower,
        upper: upper_entries(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle4() -> Graph {
        Graph::from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn construction_lower_values() {
        assert_eq!(construction_lower(1), Ok(1));
        assert_eq!(construction_lower(4), Ok(10));
        assert_eq!(construction_lower(10), Ok(28));
        assert_eq!(construction_lower(0), Err(BoundsError::ZeroN));
    }

    #[test]
    fn logarithmic_lower_values() {
        assert_eq!(logarithmic_lower(1), Ok(1));
        assert_eq!(logarithmic_lower(3), Ok(7));
        assert_eq!(logarithmic_lower(4), Ok(9));
        assert_eq!(logarithmic_lower(0), Err(BoundsError::ZeroN));
    }

    #[test]
    fn floor_log2_is_exact_at_powers_of_two() {
        for p in 0..63 {
            assert_eq!(floor_log2(1 << p), p);
            assert_eq!(floor_log2((1 << (p + 1)) - 1), p);
        }
    }

    #[test]
    fn upper_bound_values() {
        let k = |m| Graph::complete(m).unwrap();
        assert_eq!(twice_order_minus_three_upper(&k(4)), Ok(5));
        assert_eq!(twice_order_minus_three_upper(&k(2)), Ok(1));
        assert_eq!(twice_order_minus_three_upper(&k(6)), Ok(9));
        assert_eq!(
            twice_order_minus_three_upper(&k(1)),
            Err(BoundsError::NoEdges)
        );
        assert_eq!(twice_order_minus_four_upper(&k(4)), Ok(4));
        assert_eq!(twice_order_minus_four_upper(&k(6)), Ok(8));
        assert_eq!(twice_order_minus_four_upper(&k(8)), Ok(12));
        assert_eq!(
            twice_order_minus_four_upper(&k(2)),
            Err(BoundsError::TooFewVertices(2))
        );
        assert_eq!(triangle_free_upper(&cycle4()), Some(3));
        assert_eq!(triangle_free_upper(&k(4)), None);
        assert_eq!(triangle_free_upper(&k(2)), Some(1));
    }

    #[test]
    fn construction_lower_stays_under_the_upper_bounds() {
        for n in 2..=256u32 {
            let g = Graph::complete(2 * n).unwrap();
            assert!(
                construction_lower(n as u64).unwrap() <= twice_order_minus_four_upper(&g).unwrap()
            );
        }
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(
            construction_lower(1).unwrap(),
            twice_order_minus_three_upper(&k2).unwrap()
        );
        for n in 1..=64 {
            let r = bounds_for_k2n(n).unwrap();
            assert!(r.best_lower().unwrap() <= r.best_upper().unwrap());
        }
    }

    #[test]
    fn k2n_reports() {
        let r = bounds_for_k2n(2).unwrap();
        assert_eq!((r.best_lower(), r.best_upper()), (Some(4), Some(4)));
        let r = bounds_for_k2n(3).unwrap();
        assert_eq!((r.best_lower(), r.best_upper()), (Some(7), Some(8)));
        let r = bounds_for_k2n(1).unwrap();
        assert_eq!(r.best_lower(), Some(1));
        assert_eq!(r.get(BoundKind::TwiceOrderMinusThree).unwrap().value, Ok(1));
        assert!(!r.get(BoundKind::TwiceOrderMinusFour).unwrap().applicable());
        assert!(bounds_for_k2n(0).is_err());
    }

    #[test]
    fn graph_report_matches_k2n_report() {
        for n in 1..=6 {
            let a = bounds_for_k2n(n).unwrap();
            let b = bounds_for_graph(&Graph::complete(2 * n).unwrap());
            assert_eq!(a, b);
        }
        let r = bounds_for_graph(&cycle4());
        assert_eq!(r.best_lower(), None);
        assert_eq!(r.best_upper(), Some(3));
    }

    #[test]
    fn best_upper_on_edgeless_graph() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(best_upper(&g), Some(0));
        let g = Graph::from_edges(3, []).unwrap();
        assert_eq!(best_upper(&g), Some(2));
    }

    #[test]
    fn render_has_machine_block() {
        let text = bounds_for_k2n(3).unwrap().render();
        for line in [
            "lower.construction=7",
            "lower.logarithmic=7",
            "upper.twice_order_minus_4=8",
            "upper.twice_order_minus_3=9",
            "upper.triangle_free=na",
            "best_lower=7",
            "best_upper=8",
        ] {
            assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
        }
    }
}
