//! Vertex and edge deletion, edge contraction and k-subdivision.
//!
//! Deletion and contraction re-index the surviving vertices compactly,
//! preserving their relative order, and return the old-to-new map. Edge ids
//! of the result follow the order of the surviving source edges.

use super::{Graph, GraphError};

/// Old vertex id to new vertex id; `None` for a deleted vertex.
pub type VertexMap = Vec<Option<usize>>;

/// A k-subdivision together with the superedge structure.
///
/// Original vertices keep their ids. The internal vertex at distance `l`
/// from the smaller endpoint of original edge `i` is
/// `n + i * (k - 1) + (l - 1)`, and the replacement path of edge `i` is
/// made of edges `i * k .. i * k + k`, listed from the smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdividedGraph {
    pub graph: Graph,
    pub k: usize,
    /// For each original edge id, its `k` replacement edge ids in path order.
    pub superedges: Vec<Vec<usize>>,
    /// For each original edge id, internal vertices for `l = 1..k`.
    pub internal_vertices: Vec<Vec<usize>>,
}

impl Graph {
    /// G − v together with the vertex re-index map.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(v)?;
        let map: VertexMap = (0..self.vertex_count())
            .map(|x| match x.cmp(&v) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        let pairs = self
            .edges()
            .iter()
            .filter_map(|&(a, b)| Some((map[a]?, map[b]?)));
        let g = Graph::new(self.vertex_count() - 1, pairs).expect("subgraph of a simple graph");
        Ok((g, map))
    }

    pub(crate) fn without_vertex(&self, v: usize) -> Graph {
        self.delete_vertex(v).expect("vertex in range").0
    }

    /// True iff removing `v` leaves more components among the remaining
    /// vertices than `G` had.
    pub fn is_cut_vertex(&self, v: usize) -> Result<bool, GraphError> {
        let (rest, _) = self.delete_vertex(v)?;
        // an isolated v vanishes entirely, taking its own component with it
        let before = self.component_count() - usize::from(self.degree(v) == 0);
        Ok(rest.component_count() > before)
    }

    /// G − e; vertices are unchanged.
    pub fn delete_edge(&self, e: usize) -> Result<Graph, GraphError> {
        self.checked_edge(e)?;
        let pairs = self
            .edges()
            .iter()
            .enumerate()
            .filter(|&(id, _)| id != e)
            .map(|(_, &p)| p);
        Ok(Graph::new(self.vertex_count(), pairs).expect("subgraph of a simple graph"))
    }

    /// True iff removing `e` disconnects its component.
    pub fn is_bridge(&self, e: usize) -> Result<bool, GraphError> {
        let rest = self.delete_edge(e)?;
        Ok(rest.component_count() > self.component_count())
    }

    /// G/e as a simple graph. The merged vertex takes the position of the
    /// smaller endpoint; parallel edges collapse onto their first occurrence.
    pub fn contract_edge(&self, e: usize) -> Result<(Graph, VertexMap), GraphError> {
        let (u, v) = self.checked_edge(e)?;
        // u < v: v disappears into u
        let map: VertexMap = (0..self.vertex_count())
            .map(|x| match x.cmp(&v) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => Some(u),
                std::cmp::Ordering::Greater => Some(x - 1),
            })
            .collect();
        let mut seen = std::collections::HashSet::new();
        let mut pairs = Vec::new();
        for (id, &(a, b)) in self.edges().iter().enumerate() {
            if id == e {
                continue;
            }
            let (x, y) = (map[a].unwrap(), map[b].unwrap());
            let key = (x.min(y), x.max(y));
            if x != y && seen.insert(key) {
                pairs.push((x, y));
            }
        }
        let g = Graph::new(self.vertex_count() - 1, pairs).expect("simplified contraction");
        Ok((g, map))
    }

    /// G^{1/k}: every edge replaced by a path with `k` edges.
    pub fn subdivide(&self, k: usize) -> Result<SubdividedGraph, GraphError> {
        if k < 1 {
            return Err(GraphError::InvalidK(k));
        }
        let n = self.vertex_count();
        let m = self.edge_count();
        let mut pairs = Vec::with_capacity(k * m);
        let mut superedges = Vec::with_capacity(m);
        let mut internal_vertices = Vec::with_capacity(m);
        for (i, &(a, b)) in self.edges().iter().enumerate() {
            let inner: Vec<usize> = (0..k - 1).map(|l| n + i * (k - 1) + l).collect();
            let mut walk = Vec::with_capacity(k + 1);
            walk.push(a);
            walk.extend(&inner);
            walk.push(b);
            superedges.push((i * k..i * k + k).collect());
            pairs.extend(walk.windows(2).map(|w| (w[0], w[1])));
            internal_vertices.push(inner);
        }
        let graph = Graph::new(n + (k - 1) * m, pairs).expect("subdivision of a simple graph");
        Ok(SubdividedGraph {
            graph,
            k,
            superedges,
            internal_vertices,
        })
    }
}
