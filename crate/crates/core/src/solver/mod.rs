//! Exact TDEC computation.
//!
//! [`solve_exact`] tries `k = lower, lower + 1, ..` and runs a complete
//! backtracking search for a TDE-coloring with at most `k` classes at each
//! step. Splitting a class of size two or more keeps a TDE-coloring valid,
//! so feasibility is monotone in `k` and the first success is optimal.

mod oracle;
mod search;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{self, EdgeColoring};
use crate::graph::Graph;

pub use oracle::{
    solve_oracle_enumeration, solve_oracle_line_graph, SizeCapExceeded, ORACLE_MAX_EDGES,
};
pub use search::MAX_SEARCH_EDGES;

use search::{Outcome, Search};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveStatus {
    Exact,
    Infeasible,
    TimedOut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchingOrder {
    /// Edges with more adjacent edges first, ties by edge id.
    #[default]
    LineDegreeDesc,
    InputOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOptions {
    pub timeout: Option<Duration>,
    /// Must not exceed the true value.
    pub initial_lower: Option<usize>,
    /// Must not be below the true value. Only tightens the bracket reported
    /// on timeout; the search itself is seeded by the heuristic witness.
    pub initial_upper: Option<usize>,
    pub branching_order: BranchingOrder,
    /// Re-solve with both brute-force oracles when the graph is small enough.
    pub oracle_cross_check: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            timeout: Some(Duration::from_secs(60)),
            initial_lower: None,
            initial_upper: None,
            branching_order: BranchingOrder::default(),
            oracle_cross_check: false,
        }
    }
}

impl SolverOptions {
    pub fn with_timeout(timeout: Duration) -> Self {
        SolverOptions {
            timeout: Some(timeout),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes_explored: u64,
    pub peak_depth: usize,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub witness: Option<EdgeColoring>,
    pub proven_lower: usize,
    pub proven_upper: usize,
    pub stats: SolveStats,
    /// Whether both oracles agreed with `value`; absent when not requested
    /// or the graph is over the oracle cap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph has a K2 component and admits no TDE-coloring")]
pub struct InfeasibleGraph;

/// True iff every edge has an adjacent edge, i.e. no component is a single
/// edge. Edgeless graphs are trivially feasible.
pub fn tde_feasible(g: &Graph) -> bool {
    (0..g.edge_count()).all(|e| g.line_degree(e) > 0)
}

pub fn branching_order(g: &Graph, order: BranchingOrder) -> Vec<usize> {
    let mut edges: Vec<usize> = (0..g.edge_count()).collect();
    if order == BranchingOrder::LineDegreeDesc {
        edges.sort_by_key(|&e| (std::cmp::Reverse(g.line_degree(e)), e));
    }
    edges
}

/// A TDE-coloring from greedy search, falling back to one class per edge.
pub fn heuristic_upper(g: &Graph) -> Result<(usize, EdgeColoring), InfeasibleGraph> {
    if !tde_feasible(g) {
        return Err(InfeasibleGraph);
    }
    let m = g.edge_count();
    if (1..=MAX_SEARCH_EDGES).contains(&m) {
        let mut s = Search::new(
            g,
            branching_order(g, BranchingOrder::LineDegreeDesc),
            m,
            None,
        );
        if s.greedy() {
            if let Ok(c) = EdgeColoring::new(s.colors()) {
                if coloring::is_tde_coloring(g, &c) {
                    return Ok((c.class_count(), c.normalize()));
                }
            }
        }
    }
    let all = EdgeColoring::new((0..m).collect()).expect("identity coloring is surjective");
    Ok((m, all))
}

/// Exact TDEC with witness, or `Infeasible`, or `TimedOut` with a proven
/// bracket. Deterministic for identical inputs.
pub fn solve_exact(g: &Graph, opts: &SolverOptions) -> SolveResult {
    let start = Instant::now();
    let deadline = opts.timeout.map(|t| start + t);
    let mut stats = SolveStats::default();
    let finish = |mut r: SolveResult, stats: SolveStats| {
        r.stats = SolveStats {
            elapsed_ms: start.elapsed().as_millis() as u64,
            ..stats
        };
        if opts.oracle_cross_check && r.status != SolveStatus::TimedOut {
            r.oracle_agreement = cross_check(g, r.value);
        }
        r
    };
    let m = g.edge_count();
    if m == 0 {
        let empty = EdgeColoring::new(Vec::new()).expect("empty coloring");
        return finish(exact(0, empty), stats);
    }
    let Ok((heur_k, heur_witness)) = heuristic_upper(g) else {
        return finish(
            SolveResult {
                status: SolveStatus::Infeasible,
                value: None,
                witness: None,
                proven_lower: 0,
                proven_upper: 0,
                stats: SolveStats::default(),
                oracle_agreement: None,
            },
            stats,
        );
    };
    let lower = g
        .max_degree()
        .max(2)
        .max(opts.initial_lower.unwrap_or(0))
        .min(heur_k);
    let timed_out = |lower: usize| match opts.initial_upper {
        // a tighter caller bound comes without a witness
        Some(u) if u < heur_k => SolveResult {
            witness: None,
            proven_upper: u.max(lower),
            ..timed_out(lower, heur_k, heur_witness.clone())
        },
        _ => timed_out(lower, heur_k, heur_witness.clone()),
    };
    if m > MAX_SEARCH_EDGES {
        return finish(timed_out(lower), stats);
    }
    let order = branching_order(g, opts.branching_order);
    for k in lower..heur_k {
        let mut s = Search::new(g, order.clone(), k, deadline);
        let outcome = s.run();
        stats.nodes_explored += s.nodes;
        stats.peak_depth = stats.peak_depth.max(s.peak_depth);
        match outcome {
            Outcome::Found => {
                let witness = EdgeColoring::new(s.colors())
                    .expect("search colors are contiguous")
                    .normalize();
                debug_assert!(coloring::is_tde_coloring(g, &witness));
                return finish(exact(witness.class_count(), witness), stats);
            }
            Outcome::Exhausted => {}
            Outcome::TimedOut => return finish(timed_out(k), stats),
        }
    }
    finish(exact(heur_k, heur_witness), stats)
}

fn exact(value: usize, witness: EdgeColoring) -> SolveResult {
    SolveResult {
        status: SolveStatus::Exact,
        value: Some(value),
        witness: Some(witness),
        proven_lower: value,
        proven_upper: value,
        stats: SolveStats::default(),
        oracle_agreement: None,
    }
}

fn timed_out(lower: usize, upper: usize, witness: EdgeColoring) -> SolveResult {
    SolveResult {
        status: SolveStatus::TimedOut,
        value: None,
        witness: Some(witness),
        proven_lower: lower,
        proven_upper: upper,
        stats: SolveStats::default(),
        oracle_agreement: None,
    }
}

fn cross_check(g: &Graph, value: Option<usize>) -> Option<bool> {
    let m = g.edge_count();
    let a = solve_oracle_enumeration(g, m).ok()?;
    let b = solve_oracle_line_graph(g, m).ok()?;
    Some(a == value && b == value)
}
