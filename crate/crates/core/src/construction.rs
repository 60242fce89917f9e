//! Interval edge colorings of K_2n.
//!
//! [`construct`] colors K_2n with `3n - 2` colors by splitting the vertex
//! set into a low half `1..=n` and a high half `n+1..=2n` and assigning each
//! edge `(i, j)`, `i < j`, a color by one of eight index-range clauses.
//! [`round_robin`] is the classical 1-factorization with `2n - 1` colors.

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Edge, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("n must be at least 1")]
    ZeroN,
    #[error("({i}, {j}) is not an edge of K_{order} with i < j")]
    InvalidPair { i: Vertex, j: Vertex, order: u64 },
    #[error("edge ({i}, {j}) of K_{order} matches no case")]
    Unclassified { i: Vertex, j: Vertex, order: u64 },
    #[error("edge ({i}, {j}) of K_{order} matches cases {cases:?}")]
    Ambiguous {
        i: Vertex,
        j: Vertex,
        order: u64,
        cases: Vec<CaseId>,
    },
    #[error("{case} gives color {color} at ({i}, {j}), outside 1..={span}")]
    ColorOutOfRange {
        case: CaseId,
        i: Vertex,
        j: Vertex,
        color: i64,
        span: u32,
    },
}

/// One of the eight clauses of the K_2n construction, numbered 1..=8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseId(u8);

impl CaseId {
    pub const ALL: [CaseId; 8] = [
        CaseId(1),
        CaseId(2),
        CaseId(3),
        CaseId(4),
        CaseId(5),
        CaseId(6),
        CaseId(7),
        CaseId(8),
    ];

    pub fn new(id: u8) -> Option<Self> {
        (1..=8).contains(&id).then_some(CaseId(id))
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.0)
    }
}

#[derive(Debug, Clone, Copy)]
enum Side {
    SumAtMost(i64),
    SumAtLeast(i64),
    DiffAtMost(i64),
    DiffAtLeast(i64),
    DiffEquals(i64),
}

impl Side {
    fn holds(self, i: i64, j: i64) -> bool {
        match self {
            Side::SumAtMost(k) => i + j <= k,
            Side::SumAtLeast(k) => i + j >= k,
            Side::DiffAtMost(k) => j - i <= k,
            Side::DiffAtLeast(k) => j - i >= k,
            Side::DiffEquals(k) => j - i == k,
        }
    }
}

/// Color formula `a*i + b*j + offset`.
#[derive(Debug, Clone, Copy)]
struct Formula {
    a: i64,
    b: i64,
    offset: i64,
}

impl Formula {
    fn eval(self, i: i64, j: i64) -> i64 {
        self.a * i + self.b * j + self.offset
    }
}

/// Index ranges (possibly empty), side condition and color formula of a case.
#[derive(Debug, Clone)]
struct Clause {
    id: CaseId,
    rows: RangeInclusive<i64>,
    cols: RangeInclusive<i64>,
    side: Side,
    formula: Formula,
}

impl Clause {
    fn matches(&self, i: i64, j: i64) -> bool {
        i < j && self.rows.contains(&i) && self.cols.contains(&j) && self.side.holds(i, j)
    }
}

fn clauses(n: i64) -> [Clause; 8] {
    let half = n / 2;
    let half_down = (n - 1) / 2;
    let f = |a, b, offset| Formula { a, b, offset };
    [
        Clause {
            id: CaseId(1),
            rows: 1..=half,
            cols: 2..=n,
            side: Side::SumAtMost(n + 1),
            formula: f(1, 1, -2),
        },
        Clause {
            id: CaseId(2),
            rows: 2..=n - 1,
            cols: half + 2..=n,
            side: Side::SumAtLeast(n + 2),
            formula: f(1, 1, n - 3),
        },
        Clause {
            id: CaseId(3),
            rows: 3..=n,
            cols: n + 1..=2 * n - 2,
            side: Side::DiffAtMost(n - 2),
            formula: f(-1, 1, n),
        },
        Clause {
            id: CaseId(4),
            rows: 1..=n,
            cols: n + 1..=2 * n,
            side: Side::DiffAtLeast(n),
            formula: f(-1, 1, 0),
        },
        Clause {
            id: CaseId(5),
            rows: 2..=1 + half_down,
            cols: n + 1..=n + half_down,
            side: Side::DiffEquals(n - 1),
            formula: f(2, 0, -2),
        },
        Clause {
            id: CaseId(6),
            rows: half_down + 2..=n,
            cols: n + 1 + half_down..=2 * n - 1,
            side: Side::DiffEquals(n - 1),
            formula: f(1, 1, -2),
        },
        Clause {
            id: CaseId(7),
            rows: n + 1..=n + half - 1,
            cols: n + 2..=2 * n - 2,
            side: Side::SumAtMost(3 * n - 1),
            formula: f(1, 1, -2 * n),
        },
        Clause {
            id: CaseId(8),
            rows: n + 1..=2 * n - 1,
            cols: n + half + 1..=2 * n,
            side: Side::SumAtLeast(3 * n),
            formula: f(1, 1, -n - 1),
        },
    ]
}

/// Precomputed clause table for one `n`.
pub struct Classifier {
    n: u32,
    clauses: [Clause; 8],
}

impl Classifier {
    pub fn new(n: u32) -> Result<Self, ConstructionError> {
        if n == 0 {
            return Err(ConstructionError::ZeroN);
        }
        Ok(Classifier {
            n,
            clauses: clauses(n as i64),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn order(&self) -> u64 {
        2 * self.n as u64
    }

    /// Every case whose ranges and side condition admit `(i, j)`.
    pub fn matching_cases(&self, i: Vertex, j: Vertex) -> Vec<CaseId> {
        let (i, j) = (i as i64, j as i64);
        self.clauses
            .iter()
            .filter(|c| c.matches(i, j))
            .map(|c| c.id)
            .collect()
    }

    pub fn classify(&self, i: Vertex, j: Vertex) -> Result<CaseId, ConstructionError> {
        let order = self.order();
        if i == 0 || i >= j || j as u64 > order {
            return Err(ConstructionError::InvalidPair { i, j, order });
        }
        let mut cases = self.matching_cases(i, j);
        match cases.len() {
            1 => Ok(cases.remove(0)),
            0 => Err(ConstructionError::Unclassified { i, j, order }),
            _ => Err(ConstructionError::Ambiguous { i, j, order, cases }),
        }
    }

    /// The color of case `case` at `(i, j)`, without checking that the case applies.
    pub fn case_color(&self, case: CaseId, i: Vertex, j: Vertex) -> i64 {
        self.clauses[(case.0 - 1) as usize]
            .formula
            .eval(i as i64, j as i64)
    }

    pub fn color(&self, i: Vertex, j: Vertex) -> Result<Color, ConstructionError> {
        let case = self.classify(i, j)?;
        let color = self.case_color(case, i, j);
        let span = 3 * self.n - 2;
        if !(1..=span as i64).contains(&color) {
            return Err(ConstructionError::ColorOutOfRange {
                case,
                i,
                j,
                color,
                span,
            });
        }
        Ok(color as Color)
    }
}

/// The case clause that colors edge `(i, j)` of K_2n.
pub fn classify_edge(n: u32, i: Vertex, j: Vertex) -> Result<CaseId, ConstructionError> {
    Classifier::new(n)?.classify(i, j)
}

/// The interval coloring of K_2n with colors `1..=3n-2`.
pub fn construct(n: u32) -> Result<EdgeColoring, ConstructionError> {
    let classifier = Classifier::new(n)?;
    let order = 2 * n;
    let mut coloring = EdgeColoring::new(3 * n - 2);
    for i in 1..=order {
        for j in i + 1..=order {
            let col = classifier.color(i, j)?;
            coloring.set(Edge::new(i, j).expect("i < j"), col);
        }
    }
    Ok(coloring)
}

/// Edge count and color range of one case in the K_2n construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseStats {
    pub case: CaseId,
    pub edges: usize,
    pub colors: Option<(Color, Color)>,
}

/// Per-case statistics over every edge of K_2n.
pub fn case_stats(n: u32) -> Result<Vec<CaseStats>, ConstructionError> {
    let classifier = Classifier::new(n)?;
    let mut stats: Vec<CaseStats> = CaseId::ALL
        .iter()
        .map(|&case| CaseStats {
            case,
            edges: 0,
            colors: None,
        })
        .collect();
    let order = 2 * n;
    for i in 1..=order {
        for j in i + 1..=order {
            let case = classifier.classify(i, j)?;
            let col = classifier.color(i, j)?;
            let s = &mut stats[(case.0 - 1) as usize];
            s.edges += 1;
            s.colors = Some(match s.colors {
                None => (col, col),
                Some((lo, hi)) => (lo.min(col), hi.max(col)),
            });
        }
    }
    Ok(stats)
}

/// The circle-method 1-factorization of K_2n with colors `1..=2n-1`.
///
/// Vertex `2n` is fixed; in round `r` it meets vertex `r + 1` and the
/// remaining vertices `1..=2n-1` pair up symmetrically around it.
pub fn round_robin(n: u32) -> Result<EdgeColoring, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::ZeroN);
    }
    let m = 2 * n - 1;
    let mut coloring = EdgeColoring::new(m);
    for round in 0..m {
        let color = round + 1;
        coloring.set(Edge::new(round + 1, 2 * n).expect("distinct"), color);
        for k in 1..n {
            let a = (round + k) % m + 1;
            let b = (round + m - k) % m + 1;
            coloring.set(Edge::new(a, b).expect("distinct"), color);
        }
    }
    Ok(coloring)
}
