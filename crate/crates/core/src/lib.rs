//! Interval edge colorings.
//!
//! A proper edge coloring of a graph with colors `1..=t` is an *interval*
//! coloring when every color appears and the colors at each vertex form a
//! run of consecutive integers. W(G) is the largest such `t`.
//!
//! The crate builds an interval coloring of the complete graph K_2n with
//! `3n - 2` colors ([`construction::construct`]), verifies interval
//! colorings of arbitrary graphs ([`coloring::verify_interval`]), evaluates
//! the known bounds on W ([`bounds`]) and computes W exactly on small graphs
//! by backtracking ([`search::compute_w`]).

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod construction;
pub mod graph;
pub mod io;
pub mod search;

pub use coloring::{
    verify_interval, Color, EdgeColoring, IntervalReport, Violation, ViolationKind,
};
pub use construction::{classify_edge, construct, round_robin, CaseId};
pub use graph::{Edge, Graph, GraphError, Vertex};
pub use search::{compute_w, find_interval_coloring, SearchConfig, SearchOutcome, SearchStatus};
