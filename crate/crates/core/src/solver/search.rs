//! Backtracking search for a TDE-coloring with at most `k` classes.
//!
//! Edges and colors are bitsets (`u128`), so a graph may have at most
//! [`MAX_SEARCH_EDGES`] edges. Colors are introduced in order: an edge may
//! take a color `c` only if every color below `c` is already in use.
//!
//! Pruning is sound because class membership only grows. For each edge we
//! keep the set of colors that can still dominate it: used colors whose
//! members are all adjacent to the edge, plus an unused color when one is
//! left and the edge still has an unassigned neighbour to carry it. A class
//! that has gained a non-adjacent member can never dominate that edge again,
//! so an empty set proves the branch dead. When an edge has exactly one
//! possible dominator `c` and no fresh option, no edge outside its
//! neighbourhood may join `c`; this restricts the domains of unassigned edges.

use std::time::Instant;

use crate::graph::Graph;

pub const MAX_SEARCH_EDGES: usize = 128;

const UNASSIGNED: u8 = u8::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found,
    Exhausted,
    TimedOut,
}

pub(crate) struct Search {
    adj: Vec<u128>,
    order: Vec<usize>,
    k: usize,
    color: Vec<u8>,
    class: Vec<u128>,
    used: usize,
    unassigned: u128,
    deadline: Option<Instant>,
    pub nodes: u64,
    pub peak_depth: usize,
    timed_out: bool,
}

pub(crate) fn edge_adjacency(g: &Graph) -> Vec<u128> {
    (0..g.edge_count())
        .map(|e| {
            g.adjacent_edges(e)
                .into_iter()
                .fold(0u128, |acc, f| acc | 1u128 << f)
        })
        .collect()
}

#[inline]
fn bit(i: usize) -> u128 {
    1u128 << i
}

impl Search {
    pub fn new(g: &Graph, order: Vec<usize>, k: usize, deadline: Option<Instant>) -> Self {
        let m = g.edge_count();
        assert!(
            m <= MAX_SEARCH_EDGES,
            "search supports at most {MAX_SEARCH_EDGES} edges"
        );
        assert!(k <= MAX_SEARCH_EDGES);
        let all = if m == 128 { u128::MAX } else { bit(m) - 1 };
        Search {
            adj: edge_adjacency(g),
            order,
            k,
            color: vec![UNASSIGNED; m],
            class: vec![0; k],
            used: 0,
            unassigned: all,
            deadline,
            nodes: 0,
            peak_depth: 0,
            timed_out: false,
        }
    }

    pub fn colors(&self) -> Vec<usize> {
        self.color.iter().map(|&c| c as usize).collect()
    }

    fn assign(&mut self, e: usize, c: usize) {
        self.color[e] = c as u8;
        self.class[c] |= bit(e);
        self.unassigned &= !bit(e);
        if c == self.used {
            self.used += 1;
        }
    }

    fn unassign(&mut self, e: usize) {
        let c = self.color[e] as usize;
        self.color[e] = UNASSIGNED;
        self.class[c] &= !bit(e);
        self.unassigned |= bit(e);
        if c + 1 == self.used && self.class[c] == 0 {
            self.used -= 1;
        }
    }

    /// False if some edge can no longer be dominated or some unassigned edge
    /// has no color left.
    fn propagate(&self) -> bool {
        let fresh_left = self.used < self.k;
        // allowed[c]: edges that may still join class c
        let mut allowed = [u128::MAX; MAX_SEARCH_EDGES];
        for &adj_e in &self.adj {
            let mut count = 0;
            let mut last = 0;
            for c in 0..self.used {
                if self.class[c] & !adj_e == 0 {
                    count += 1;
                    last = c;
                }
            }
            let fresh = fresh_left && adj_e & self.unassigned != 0;
            if count == 0 && !fresh {
                return false;
            }
            if count == 1 && !fresh {
                allowed[last] &= adj_e;
            }
        }
        let mut rest = self.unassigned;
        while rest != 0 {
            let f = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let open = fresh_left
                || (0..self.used)
                    .any(|c| self.class[c] & self.adj[f] == 0 && allowed[c] & bit(f) != 0);
            if !open {
                return false;
            }
        }
        true
    }

    /// Runs the search; on `Found` the current assignment is a witness.
    pub fn run(&mut self) -> Outcome {
        if !self.propagate() {
            return Outcome::Exhausted;
        }
        match self.dfs(0) {
            true => Outcome::Found,
            false if self.timed_out => Outcome::TimedOut,
            false => Outcome::Exhausted,
        }
    }

    fn dfs(&mut self, depth: usize) -> bool {
        self.peak_depth = self.peak_depth.max(depth);
        if depth == self.order.len() {
            return true;
        }
        let e = self.order[depth];
        let candidates = self.used.min(self.k - 1) + 1;
        for c in 0..candidates {
            if self.class[c] & self.adj[e] != 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes & 0xFFF == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() >= d {
                        self.timed_out = true;
                        return false;
                    }
                }
            }
            self.assign(e, c);
            if self.propagate() && self.dfs(depth + 1) {
                return true;
            }
            self.unassign(e);
            if self.timed_out {
                return false;
            }
        }
        false
    }

    /// Greedy completion: every edge in `order` takes the lowest color that
    /// keeps the partial assignment consistent. With `k == m` a fresh color
    /// always keeps it consistent, so this never gets stuck.
    pub fn greedy(&mut self) -> bool {
        for i in 0..self.order.len() {
            let e = self.order[i];
            let mut placed = false;
            for c in 0..=self.used.min(self.k - 1) {
                if self.class[c] & self.adj[e] != 0 {
                    continue;
                }
                self.assign(e, c);
                if self.propagate() {
                    placed = true;
                    break;
                }
                self.unassign(e);
            }
            if !placed {
                return false;
            }
        }
        true
    }
}
