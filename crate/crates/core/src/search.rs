//! Exact backtracking search for interval edge colorings.
//!
//! Edges are colored one at a time in a fixed order. Each vertex keeps a
//! bitmask of the colors on its colored edges; a color `c` is admissible for
//! edge `(u, v)` only if it is new at both ends and keeps each endpoint's
//! colors inside a window of `deg` consecutive values. A branch is also cut
//! when the remaining edges cannot cover the still-unused colors.
//!
//! The first edge only tries colors `c <= t + 1 - c`: reflecting every color
//! `c -> t + 1 - c` maps interval colorings to interval colorings, so the
//! other half of the tree is a mirror image.

use thiserror::Error;

use crate::bounds;
use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Edge, Graph};

/// Largest span the search supports; palettes are `u128` bitmasks.
pub const MAX_SPAN: Color = 128;

/// Default node budget per probe. K_6 at span 8 is far below it.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("span t must be at least 1")]
    ZeroSpan,
    #[error("span {0} exceeds the supported maximum of {MAX_SPAN}")]
    SpanTooLarge(Color),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum EdgeOrder {
    /// Lexicographic by `(i, j)`.
    #[default]
    Lexicographic,
    /// By `(j, i)`: vertex `j` is finished as soon as its last edge is reached.
    Colex,
}

impl EdgeOrder {
    fn arrange(self, edges: &[Edge]) -> Vec<Edge> {
        let mut out = edges.to_vec();
        if self == EdgeOrder::Colex {
            out.sort_unstable_by_key(|e| (e.hi(), e.lo()));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub t: Color,
    /// Maximum number of color assignments to try; 0 means unlimited.
    pub node_budget: u64,
    pub edge_order: EdgeOrder,
}

impl SearchConfig {
    pub fn new(t: Color) -> Self {
        SearchConfig {
            t,
            node_budget: DEFAULT_NODE_BUDGET,
            edge_order: EdgeOrder::default(),
        }
    }

    pub fn with_budget(mut self, node_budget: u64) -> Self {
        self.node_budget = node_budget;
        self
    }

    pub fn with_order(mut self, edge_order: EdgeOrder) -> Self {
        self.edge_order = edge_order;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Found(EdgeColoring),
    /// The search space was exhausted: no interval t-coloring exists.
    ExhaustedNoSolution,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SearchStatus::Found(_) => "found",
            SearchStatus::ExhaustedNoSolution => "exhausted",
            SearchStatus::BudgetExceeded => "budget-exceeded",
        }
    }

    pub fn coloring(&self) -> Option<&EdgeColoring> {
        match self {
            SearchStatus::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_explored: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Solver {
    t: Color,
    budget: u64,
    nodes: u64,
    edges: Vec<(usize, usize)>,
    degree: Vec<u32>,
    // Color c sits at bit c - 1 so that color 128 fits.
    masks: Vec<u128>,
    assignment: Vec<Color>,
    // Indexed by color; slot 0 unused.
    color_uses: Vec<u32>,
    unused_colors: u32,
}

impl Solver {
    /// Admissible color window `[lo, hi]` at vertex `x` given its colored edges.
    fn window(&self, x: usize) -> (Color, Color) {
        let mask = self.masks[x];
        if mask == 0 {
            return (1, self.t);
        }
        let min = mask.trailing_zeros() + 1;
        let max = u128::BITS - mask.leading_zeros();
        let deg = self.degree[x];
        (
            max.saturating_sub(deg - 1).max(1),
            (min + deg - 1).min(self.t),
        )
    }

    fn solve(&mut self, k: usize) -> Step {
        if k == self.edges.len() {
            return if self.unused_colors == 0 {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        let (u, v) = self.edges[k];
        let (lo_u, hi_u) = self.window(u);
        let (lo_v, hi_v) = self.window(v);
        let lo = lo_u.max(lo_v);
        let mut hi = hi_u.min(hi_v);
        if k == 0 {
            hi = hi.min(self.t.div_ceil(2));
        }
        let taken = self.masks[u] | self.masks[v];
        let remaining_after = (self.edges.len() - k - 1) as u32;

        for c in lo..=hi {
            let bit = 1u128 << (c - 1);
            if taken & bit != 0 {
                continue;
            }
            let fresh = self.color_uses[c as usize] == 0;
            let unused_after = self.unused_colors - fresh as u32;
            if unused_after > remaining_after {
                continue;
            }
            self.nodes += 1;
            if self.budget != 0 && self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            self.masks[u] |= bit;
            self.masks[v] |= bit;
            self.color_uses[c as usize] += 1;
            self.unused_colors = unused_after;
            self.assignment[k] = c;

            match self.solve(k + 1) {
                Step::Exhausted => {}
                done => return done,
            }

            self.masks[u] &= !bit;
            self.masks[v] &= !bit;
            self.color_uses[c as usize] -= 1;
            self.unused_colors += fresh as u32;
        }
        Step::Exhausted
    }
}

/// Decides whether `g` has an interval coloring with colors `1..=cfg.t`.
///
/// `ExhaustedNoSolution` is a proof of nonexistence. The result, including
/// the node count, is a deterministic function of `g` and `cfg`.
pub fn find_interval_coloring(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let t = cfg.t;
    if t == 0 {
        return Err(SearchError::ZeroSpan);
    }
    if t > MAX_SPAN {
        return Err(SearchError::SpanTooLarge(t));
    }
    let exhausted = SearchOutcome {
        status: SearchStatus::ExhaustedNoSolution,
        nodes_explored: 0,
    };
    // A proper coloring needs t >= Δ, and each of the t colors needs an edge.
    if (t as usize) < g.max_degree() || t as usize > g.edge_count() {
        return Ok(exhausted);
    }

    let order = cfg.edge_order.arrange(g.edges());
    let degree = g
        .vertices()
        .map(|x| g.degree(x).expect("in range") as u32)
        .collect();
    let mut solver = Solver {
        t,
        budget: cfg.node_budget,
        nodes: 0,
        edges: order
            .iter()
            .map(|e| ((e.lo() - 1) as usize, (e.hi() - 1) as usize))
            .collect(),
        degree,
        masks: vec![0; g.vertex_count() as usize],
        assignment: vec![0; order.len()],
        color_uses: vec![0; t as usize + 1],
        unused_colors: t,
    };
    let step = solver.solve(0);
    let status = match step {
        Step::Found => SearchStatus::Found(EdgeColoring::from_assignment(
            t,
            order.iter().copied().zip(solver.assignment.iter().copied()),
        )),
        Step::Exhausted => SearchStatus::ExhaustedNoSolution,
        Step::OutOfBudget => SearchStatus::BudgetExceeded,
    };
    Ok(SearchOutcome {
        status,
        nodes_explored: solver.nodes,
    })
}

/// One span probed by [`compute_w`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Probe {
    pub t: Color,
    pub status: &'static str,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WResult {
    /// Largest span with a found coloring; 0 if none was found.
    pub w: Color,
    /// False if some span above `w` ran out of budget.
    pub complete: bool,
    pub witness: Option<EdgeColoring>,
    pub probes: Vec<Probe>,
}

/// The largest `t <= t_cap` for which `g` has an interval t-coloring.
///
/// `t_cap` is first lowered to the best general upper bound on W(G), then
/// spans are probed from the top down to Δ(G). The probe that finds a
/// coloring ends the scan; every span above it was either refuted or ran out
/// of budget, and `complete` records which.
pub fn compute_w(g: &Graph, t_cap: Color, node_budget: u64, edge_order: EdgeOrder) -> WResult {
    let mut result = WResult {
        w: 0,
        complete: true,
        witness: None,
        probes: Vec::new(),
    };
    if g.edge_count() == 0 {
        return result;
    }
    let cap = bounds::best_upper(g)
        .map_or(t_cap, |u| t_cap.min(u.min(Color::MAX as u64) as Color))
        .min(MAX_SPAN);
    let floor = (g.max_degree() as Color).max(1);
    for t in (floor..=cap).rev() {
        let cfg = SearchConfig {
            t,
            node_budget,
            edge_order,
        };
        let outcome = find_interval_coloring(g, &cfg).expect("1 <= t <= MAX_SPAN");
        result.probes.push(Probe {
            t,
            status: outcome.status.name(),
            nodes_explored: outcome.nodes_explored,
        });
        match outcome.status {
            SearchStatus::Found(c) => {
                result.w = t;
                result.witness = Some(c);
                break;
            }
            SearchStatus::ExhaustedNoSolution => {}
            SearchStatus::BudgetExceeded => result.complete = false,
        }
    }
    result
}
