//! Deliberately naive reference solvers for cross-checking the search.
//!
//! Neither oracle shares code with the branch-and-bound. The partition
//! oracle enumerates every set partition of the edges and asks
//! [`coloring::validate`]; the line-graph oracle colors the vertices of L(G)
//! with its own properness and total-domination checks.

use thiserror::Error;

use crate::coloring::{self, EdgeColoring};
use crate::graph::Graph;

/// Hard cap on the edge count accepted by both oracles.
pub const ORACLE_MAX_EDGES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("oracle accepts at most {cap} edges, got {got}")]
pub struct SizeCapExceeded {
    pub got: usize,
    pub cap: usize,
}

fn check_cap(g: &Graph) -> Result<(), SizeCapExceeded> {
    if g.edge_count() > ORACLE_MAX_EDGES {
        Err(SizeCapExceeded {
            got: g.edge_count(),
            cap: ORACLE_MAX_EDGES,
        })
    } else {
        Ok(())
    }
}

/// Smallest `k <= k_max` such that some partition of the edges into `k`
/// classes is a TDE-coloring.
pub fn solve_oracle_enumeration(g: &Graph, k_max: usize) -> Result<Option<usize>, SizeCapExceeded> {
    check_cap(g)?;
    let m = g.edge_count();
    if m == 0 {
        return Ok(Some(0));
    }
    // restricted growth strings: rgs[0] = 0, rgs[i] <= max(rgs[..i]) + 1
    let mut best: Option<usize> = None;
    let mut rgs = vec![0usize; m];
    loop {
        let blocks = rgs.iter().max().unwrap() + 1;
        if blocks <= k_max && best.is_none_or(|b| blocks < b) {
            let c =
                EdgeColoring::new(rgs.clone()).expect("restricted growth strings are surjective");
            if coloring::validate(g, &c).expect("length matches").valid {
                best = Some(blocks);
            }
        }
        // next string in lexicographic order
        let mut i = m - 1;
        loop {
            if i == 0 {
                return Ok(best);
            }
            let prefix_max = rgs[..i].iter().max().copied().unwrap();
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
            i -= 1;
        }
    }
}

/// Total dominator chromatic number of L(G), searched by brute force for
/// `k = 1, 2, .., k_max`. Equal to TDEC(G) because edge adjacency in G is
/// vertex adjacency in L(G).
pub fn solve_oracle_line_graph(g: &Graph, k_max: usize) -> Result<Option<usize>, SizeCapExceeded> {
    check_cap(g)?;
    let line = g.line_graph();
    let n = line.vertex_count();
    if n == 0 {
        return Ok(Some(0));
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in line.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut color = vec![0usize; n];
    for k in 1..=k_max.min(n) {
        if td_colorable(&adj, &mut color, 0, 0, k) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn td_colorable(adj: &[Vec<bool>], color: &mut [usize], v: usize, used: usize, k: usize) -> bool {
    let n = adj.len();
    if v == n {
        return is_total_dominator(adj, color, used);
    }
    for c in 0..(used + 1).min(k) {
        if (0..v).any(|u| adj[v][u] && color[u] == c) {
            continue;
        }
        color[v] = c;
        if td_colorable(adj, color, v + 1, used.max(c + 1), k) {
            return true;
        }
    }
    false
}

/// Every vertex must see all of some color class in its open neighbourhood.
fn is_total_dominator(adj: &[Vec<bool>], color: &[usize], classes: usize) -> bool {
    (0..adj.len())
        .all(|v| (0..classes).any(|c| (0..adj.len()).filter(|&u| color[u] == c).all(|u| adj[v][u])))
}
