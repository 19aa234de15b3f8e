//! Simple undirected graphs: construction, structural queries, family
//! generators, file formats and graph surgery.

mod enumerate;
mod families;
mod io;
mod surgery;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use enumerate::{
    labeled_connected_graphs, labeled_connected_graphs_on, MAX_ENUMERATION_VERTICES,
};
pub use families::Family;
pub use io::{parse_edge_list, parse_graph6, parse_graph6_line, to_edge_list, to_graph6};
pub use surgery::{SubdividedGraph, VertexMap};

/// Default cap on the vertex count accepted by [`Graph::longest_induced_path`].
pub const DEFAULT_INDUCED_PATH_CAP: usize = 40;

/// Position of a parse failure in a text input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 0-based byte offset within the line, when meaningful.
    pub byte: Option<usize>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.byte {
            Some(b) => write!(f, "line {}, byte {}: {}", self.line, b, self.message),
            None => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {edge} out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },
    #[error("{family} needs a parameter of at least {min}, got {got}")]
    ParameterTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("subdivision factor must be at least 1, got {0}")]
    InvalidK(usize),
    #[error("{what} {got} exceeds the cap of {cap}")]
    SizeCapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("parse error at {0}")]
    Parse(ParseError),
}

/// An immutable simple undirected graph.
///
/// Vertices are `0..vertex_count`. Edges are stored as `(u, v)` with `u < v`
/// and are identified by their index in [`Graph::edges`].
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, normalising each pair to `(min, max)` while keeping
    /// the given edge order.
    pub fn new<I>(vertex_count: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        let mut edge_index = HashMap::new();
        let mut neighbors = vec![Vec::new(); vertex_count];
        let mut incident = vec![Vec::new(); vertex_count];
        for (a, b) in pairs {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let (u, v) = (a.min(b), a.max(b));
            let id = edges.len();
            if edge_index.insert((u, v), id).is_some() {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            edges.push((u, v));
            neighbors[u].push(v);
            neighbors[v].push(u);
            incident[u].push(id);
            incident[v].push(id);
        }
        Ok(Graph {
            vertex_count,
            edges,
            neighbors,
            incident,
            edge_index,
        })
    }

    /// The graph on `vertex_count` vertices with no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph::new(vertex_count, std::iter::empty()).expect("edgeless graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn checked_edge(&self, id: usize) -> Result<(usize, usize), GraphError> {
        self.edges
            .get(id)
            .copied()
            .ok_or(GraphError::EdgeOutOfRange {
                edge: id,
                edge_count: self.edges.len(),
            })
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Ids of the edges incident to `v`, in edge-id order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Two distinct edges are adjacent iff they share an endpoint.
    pub fn edges_adjacent(&self, e: usize, f: usize) -> bool {
        if e == f {
            return false;
        }
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    /// Edge ids adjacent to `e`, ascending and without duplicates.
    pub fn adjacent_edges(&self, e: usize) -> Vec<usize> {
        let (u, v) = self.edges[e];
        let mut out: Vec<usize> = self.incident[u]
            .iter()
            .chain(&self.incident[v])
            .copied()
            .filter(|&f| f != e)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of edges adjacent to `e`, i.e. its degree in the line graph.
    pub fn line_degree(&self, e: usize) -> usize {
        let (u, v) = self.edges[e];
        self.degree(u) + self.degree(v) - 2
    }

    /// L(G): one vertex per edge id, adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        for e in 0..self.edges.len() {
            for f in self.adjacent_edges(e) {
                if f > e {
                    pairs.push((e, f));
                }
            }
        }
        Graph::new(self.edges.len(), pairs).expect("line graph of a simple graph is simple")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertex partition into connected components. Components are listed
    /// by smallest vertex, each sorted ascending.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    /// True for graphs with exactly one component. The null graph is not
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let pairs = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(shift + other.vertex_count, pairs).expect("disjoint union of simple graphs")
    }

    /// Number of vertices of a longest induced path, by exhaustive search.
    pub fn longest_induced_path(&self, vertex_cap: usize) -> Result<usize, GraphError> {
        if self.vertex_count > vertex_cap {
            return Err(GraphError::SizeCapExceeded {
                what: "vertex count",
                got: self.vertex_count,
                cap: vertex_cap,
            });
        }
        let mut best = self.vertex_count.min(1);
        let mut in_path = vec![false; self.vertex_count];
        // blocked[w] counts path vertices adjacent to w
        let mut blocked = vec![0usize; self.vertex_count];
        let mut path = Vec::new();
        for start in 0..self.vertex_count {
            path.push(start);
            self.extend_induced(&mut path, &mut in_path, &mut blocked, &mut best);
            path.pop();
        }
        Ok(best)
    }

    fn extend_induced(
        &self,
        path: &mut Vec<usize>,
        in_path: &mut [bool],
        blocked: &mut [usize],
        best: &mut usize,
    ) {
        let last = *path.last().expect("path is never empty here");
        in_path[last] = true;
        for &w in &self.neighbors[last] {
            blocked[w] += 1;
        }
        *best = (*best).max(path.len());
        if *best < self.vertex_count {
            for &w in &self.neighbors[last] {
                // w may touch only `last` among path vertices
                if !in_path[w] && blocked[w] == 1 {
                    path.push(w);
                    self.extend_induced(path, in_path, blocked, best);
                    path.pop();
                }
            }
        }
        for &w in &self.neighbors[last] {
            blocked[w] -= 1;
        }
        in_path[last] = false;
    }
}
