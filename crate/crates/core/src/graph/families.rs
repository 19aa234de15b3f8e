use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, ParseError};

/// Named graph families.
///
/// Vertex layout: paths and cycles run `0, 1, .., n-1`; stars, wheels and
/// friendship graphs put the hub at vertex 0. `Wheel(n)` has `n` vertices in
/// total, a hub joined to every vertex of the cycle on `n - 1` vertices, so
/// `Wheel(4)` is K4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// K_{1,n}: a hub with `n` leaves.
    Star(usize),
    Wheel(usize),
    /// F_n: a hub joined to `n` disjoint edges.
    Friendship(usize),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Star(_) => "star",
            Family::Wheel(_) => "wheel",
            Family::Friendship(_) => "friendship",
        }
    }

    fn check(&self) -> Result<(), GraphError> {
        let (min, got) = match *self {
            Family::Path(n) => (1, n),
            Family::Cycle(n) => (3, n),
            Family::Complete(n) => (1, n),
            Family::CompleteBipartite(a, b) => (1, a.min(b)),
            Family::Star(n) => (1, n),
            Family::Wheel(n) => (4, n),
            Family::Friendship(n) => (1, n),
        };
        if got < min {
            Err(GraphError::ParameterTooSmall {
                family: self.name(),
                min,
                got,
            })
        } else {
            Ok(())
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        self.check()?;
        let (n, edges): (usize, Vec<(usize, usize)>) = match *self {
            Family::Path(n) => (n, (1..n).map(|i| (i - 1, i)).collect()),
            Family::Cycle(n) => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
            Family::Complete(n) => (
                n,
                (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .collect(),
            ),
            Family::CompleteBipartite(a, b) => (
                a + b,
                (0..a)
                    .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                    .collect(),
            ),
            Family::Star(n) => (n + 1, (1..=n).map(|i| (0, i)).collect()),
            Family::Wheel(n) => {
                let rim = n - 1;
                let spokes = (1..=rim).map(|i| (0, i));
                let cycle = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
                (n, spokes.chain(cycle).collect())
            }
            Family::Friendship(t) => {
                let mut edges = Vec::with_capacity(3 * t);
                for i in 0..t {
                    let (a, b) = (2 * i + 1, 2 * i + 2);
                    edges.extend([(0, a), (0, b), (a, b)]);
                }
                (2 * t + 1, edges)
            }
        };
        Graph::new(n, edges)
    }

    /// Identifies graphs that are, up to relabelling, a member of one of the
    /// families. Only cheap structural checks are used (degrees and
    /// connectivity); no isomorphism search is performed. Complete bipartite
    /// graphs are recognised only in their star form.
    pub fn recognize(g: &Graph) -> Option<Family> {
        let n = g.vertex_count();
        let m = g.edge_count();
        if n == 0 || !g.is_connected() {
            return None;
        }
        let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let max = g.max_degree();
        if n >= 3 && m == n * (n - 1) / 2 {
            return Some(Family::Complete(n));
        }
        if max <= 2 {
            return Some(if m + 1 == n {
                Family::Path(n)
            } else {
                Family::Cycle(n)
            });
        }
        let hub = degrees.iter().position(|&d| d == n - 1)?;
        let others = || (0..n).filter(move |&v| v != hub).map(|v| degrees[v]);
        if others().all(|d| d == 1) {
            return Some(Family::Star(n - 1));
        }
        if others().all(|d| d == 3) && m == 2 * (n - 1) {
            // hub plus 2-regular connected rim
            let rim = g.without_vertex(hub);
            if rim.is_connected() {
                return Some(Family::Wheel(n));
            }
        }
        if n % 2 == 1 && others().all(|d| d == 2) && m == 3 * (n - 1) / 2 {
            return Some(Family::Friendship((n - 1) / 2));
        }
        None
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::Wheel(n)
            | Family::Friendship(n) => write!(f, "{}:{}", self.name(), n),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses `name:params`, e.g. `path:7`, `wheel:5` or
    /// `complete_bipartite:3,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: String| {
            GraphError::Parse(ParseError {
                line: 1,
                byte: None,
                message: msg,
            })
        };
        let (name, params) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| err(format!("expected <family>:<params>, got {s:?}")))?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(err(format!("{name} takes one parameter"))),
        };
        let family = match name.trim().to_ascii_lowercase().as_str() {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "star" => Family::Star(one()?),
            "wheel" => Family::Wheel(one()?),
            "friendship" => Family::Friendship(one()?),
            "complete_bipartite" | "complete-bipartite" | "bipartite" => match nums.as_slice() {
                [a, b] => Family::CompleteBipartite(*a, *b),
                _ => return Err(err(format!("{name} takes two parameters a,b"))),
            },
            other => return Err(err(format!("unknown family {other:?}"))),
        };
        family.check()?;
        Ok(family)
    }
}
