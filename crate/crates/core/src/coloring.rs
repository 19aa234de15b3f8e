//! Edge colorings and total dominator edge coloring (TDE-coloring) checks.
//!
//! A TDE-coloring is a proper edge coloring in which every edge is adjacent
//! to all members of at least one color class. Such a class never contains
//! the edge itself.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds;
use crate::graph::{Family, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("color {0} has an empty class")]
    NotSurjective(usize),
    #[error("declared class count {declared} does not match the colors used ({actual})")]
    ClassCountMismatch { declared: usize, actual: usize },
    #[error("P_{0} has no TDE-coloring construction (needs at least 3 vertices)")]
    PathTooShort(usize),
}

/// Assignment of edge ids to color classes `0..k`, every class nonempty.
///
/// Serialized as `{"k": int, "colors": [int, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring", into = "RawColoring")]
pub struct EdgeColoring {
    colors: Vec<usize>,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct RawColoring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColoring> for EdgeColoring {
    type Error = ColoringError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        let c = EdgeColoring::new(raw.colors)?;
        if c.k != raw.k {
            return Err(ColoringError::ClassCountMismatch {
                declared: raw.k,
                actual: c.k,
            });
        }
        Ok(c)
    }
}

impl From<EdgeColoring> for RawColoring {
    fn from(c: EdgeColoring) -> Self {
        RawColoring {
            k: c.k,
            colors: c.colors,
        }
    }
}

impl EdgeColoring {
    /// Builds a coloring with `k = max + 1`, rejecting unused colors below
    /// the maximum.
    pub fn new(colors: Vec<usize>) -> Result<Self, ColoringError> {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(ColoringError::NotSurjective(missing));
        }
        Ok(EdgeColoring { colors, k })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn class_count(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color_of(&self, edge: usize) -> usize {
        self.colors[edge]
    }

    /// Edge ids per class, each ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (e, &c) in self.colors.iter().enumerate() {
            out[c].push(e);
        }
        out
    }

    /// Relabels colors in first-occurrence order along edge ids.
    pub fn normalize(&self) -> EdgeColoring {
        let mut relabel = HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = relabel.len();
                *relabel.entry(c).or_insert(next)
            })
            .collect();
        EdgeColoring { colors, k: self.k }
    }
}

/// Certificate produced by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdeReport {
    pub valid: bool,
    pub proper: bool,
    /// Adjacent edge pairs `(e, f)`, `e < f`, that share a color.
    pub conflicts: Vec<(usize, usize)>,
    /// Per edge, the lowest color whose whole class is adjacent to it.
    pub dominated_by: Vec<Option<usize>>,
    /// Edges with no dominating class.
    pub failures: Vec<usize>,
}

/// Checks properness and total domination of `coloring` on `g`.
pub fn validate(g: &Graph, coloring: &EdgeColoring) -> Result<TdeReport, ColoringError> {
    if coloring.len() != g.edge_count() {
        return Err(ColoringError::LengthMismatch {
            expected: g.edge_count(),
            got: coloring.len(),
        });
    }
    let colors = coloring.colors();
    let mut conflicts = Vec::new();
    for v in 0..g.vertex_count() {
        let inc = g.incident_edges(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                if colors[e] == colors[f] {
                    conflicts.push((e.min(f), e.max(f)));
                }
            }
        }
    }
    conflicts.sort_unstable();

    let class_size = coloring.classes().iter().map(Vec::len).collect::<Vec<_>>();
    let mut dominated_by = Vec::with_capacity(g.edge_count());
    let mut failures = Vec::new();
    for e in 0..g.edge_count() {
        let mut hits: HashMap<usize, usize> = HashMap::new();
        for f in g.adjacent_edges(e) {
            *hits.entry(colors[f]).or_default() += 1;
        }
        let dom = hits
            .iter()
            .filter(|&(&c, &n)| n == class_size[c])
            .map(|(&c, _)| c)
            .min();
        if dom.is_none() {
            failures.push(e);
        }
        dominated_by.push(dom);
    }
    let proper = conflicts.is_empty();
    Ok(TdeReport {
        valid: proper && failures.is_empty(),
        proper,
        conflicts,
        dominated_by,
        failures,
    })
}

/// Convenience wrapper: true iff `coloring` is a TDE-coloring of `g`.
pub fn is_tde_coloring(g: &Graph, coloring: &EdgeColoring) -> bool {
    validate(g, coloring).is_ok_and(|r| r.valid)
}

/// Hand-checked optimal colorings of P_3 ..= P_8, indexed by `n - 3`.
const SMALL_PATH_WITNESSES: [&[usize]; 6] = [
    &[0, 1],
    &[0, 1, 0],
    &[0, 1, 2, 0],
    &[0, 1, 2, 3, 0],
    &[0, 1, 0, 2, 3, 2],
    &[0, 1, 0, 2, 3, 4, 2],
];

/// An optimal TDE-coloring of the path on `n` vertices (edges in
/// [`Family::Path`] order).
///
/// From `n = 9` on, blocks of four edges are colored `1, a, b, 2` where
/// `a, b` are fresh for every block and `1, 2` are shared by all blocks;
/// the last few edges receive a residue-specific tail.
pub fn construct_path_tdec(n: usize) -> Result<EdgeColoring, ColoringError> {
    if n < 3 {
        return Err(ColoringError::PathTooShort(n));
    }
    if n <= 8 {
        return Ok(
            EdgeColoring::new(SMALL_PATH_WITNESSES[n - 3].to_vec()).expect("surjective table")
        );
    }
    // 1-based colors on 1-based edges e_1 ..= e_{n-1}
    let block = |i: usize| -> usize {
        match i % 4 {
            1 => 1,
            0 => 2,
            r => 3 + 2 * (i / 4) + (r - 2),
        }
    };
    let k = (n - 1) / 4;
    let mut colors: Vec<usize> = Vec::with_capacity(n - 1);
    match n % 4 {
        1 => colors.extend((1..=4 * k).map(block)),
        r => {
            // n = 4k + r with the same k for r = 2, 3; n = 4k + 4 for r = 0
            colors.extend((1..=4 * k - 4).map(block));
            let tail: &[usize] = match r {
                2 => &[1, 2 * k + 1, 2 * k + 2, 2 * k + 3, 2],
                3 => &[1, 2 * k + 1, 2 * k + 2, 2 * k + 3, 2 * k + 4, 2],
                _ => &[1, 2 * k + 1, 2 * k + 2, 2, 2 * k + 3, 2 * k + 4, 2],
            };
            colors.extend_from_slice(tail);
        }
    }
    debug_assert_eq!(colors.len(), n - 1);
    let c = EdgeColoring::new(colors.into_iter().map(|c| c - 1).collect())
        .expect("construction uses every color");
    debug_assert_eq!(Ok(c.class_count()), bounds::path_formula(n));
    Ok(c)
}

/// The path graph that [`construct_path_tdec`] colors.
pub fn path_graph(n: usize) -> Graph {
    Family::Path(n).build().expect("n >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn col(v: &[usize]) -> EdgeColoring {
        EdgeColoring::new(v.to_vec()).unwrap()
    }

    #[test]
    fn p3_two_singletons() {
        let r = validate(&path_graph(3), &col(&[0, 1])).unwrap();
        assert!(r.valid);
        assert_eq!(r.dominated_by, vec![Some(1), Some(0)]);
    }

    #[test]
    fn lone_edge_is_undominated() {
        let r = validate(&path_graph(2), &col(&[0])).unwrap();
        assert!(r.proper);
        assert!(!r.valid);
        assert_eq!(r.failures, vec![0]);
    }

    #[test]
    fn improper_coloring_reports_pair() {
        let r = validate(&path_graph(4), &col(&[0, 0, 1])).unwrap();
        assert!(!r.proper);
        assert!(!r.valid);
        assert_eq!(r.conflicts, vec![(0, 1)]);
    }

    #[test]
    fn length_mismatch() {
        assert_eq!(
            validate(&path_graph(4), &col(&[0, 1])),
            Err(ColoringError::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn empty_edge_set_is_vacuously_valid() {
        let c = EdgeColoring::new(vec![]).unwrap();
        assert_eq!(c.class_count(), 0);
        assert!(validate(&Graph::empty(3), &c).unwrap().valid);
    }

    #[test]
    fn surjectivity_enforced() {
        assert_eq!(
            EdgeColoring::new(vec![0, 2]),
            Err(ColoringError::NotSurjective(1))
        );
        let err = serde_json::from_str::<EdgeColoring>(r#"{"k":3,"colors":[0,1]}"#);
        assert!(err.is_err());
        let ok: EdgeColoring = serde_json::from_str(r#"{"k":2,"colors":[0,1,0]}"#).unwrap();
        assert_eq!(ok, col(&[0, 1, 0]));
        assert_eq!(
            serde_json::to_string(&ok).unwrap(),
            r#"{"k":2,"colors":[0,1,0]}"#
        );
    }

    #[test]
    fn proper_but_undominated_instances() {
        // C6 split into its three perfect matchings
        let c6 = Family::Cycle(6).build().unwrap();
        let r = validate(&c6, &col(&[0, 1, 2, 0, 1, 2])).unwrap();
        assert!(r.proper);
        assert_eq!(r.failures.len(), 6);
        // C4 alternating is valid; P5 extension of a valid P4 coloring stays valid
        let c4 = Family::Cycle(4).build().unwrap();
        assert!(validate(&c4, &col(&[0, 1, 0, 1])).unwrap().valid);
        assert!(is_tde_coloring(&path_graph(4), &col(&[0, 1, 2])));
        assert!(is_tde_coloring(&path_graph(5), &col(&[0, 1, 2, 0])));
        // P4 (0,1,0) is valid, but appending an edge colored 1 breaks domination of e_2
        assert!(is_tde_coloring(&path_graph(4), &col(&[0, 1, 0])));
        let r = validate(&path_graph(5), &col(&[0, 1, 0, 1])).unwrap();
        assert!(r.proper && !r.valid);
    }

    #[test]
    fn path_constructions() {
        let c9 = construct_path_tdec(9).unwrap();
        assert_eq!(c9.class_count(), 6);
        // 1,a,b,2,1,c,d,2
        assert_eq!(c9.colors(), &[0, 2, 3, 1, 0, 4, 5, 1]);
        assert_eq!(construct_path_tdec(5).unwrap().class_count(), 3);
        assert_eq!(construct_path_tdec(14).unwrap().class_count(), 9);
        assert_eq!(construct_path_tdec(2), Err(ColoringError::PathTooShort(2)));
        for n in 3..=40 {
            let c = construct_path_tdec(n).unwrap();
            let r = validate(&path_graph(n), &c).unwrap();
            assert!(r.valid, "P{n}: {r:?}");
            assert_eq!(Ok(c.class_count()), bounds::path_formula(n), "P{n}");
            for (e, d) in r.dominated_by.iter().enumerate() {
                assert_ne!(c.color_of(e), d.unwrap());
            }
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(col(&[2, 0, 1]).normalize(), col(&[0, 1, 2]));
        assert_eq!(col(&[0, 1, 0]).normalize(), col(&[0, 1, 0]));
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_keeps_partition(raw in proptest::collection::vec(0usize..6, 0..14)) {
            // compact raw into a surjective coloring first
            let mut seen: Vec<usize> = raw.clone();
            seen.sort_unstable();
            seen.dedup();
            let c = col(&raw.iter().map(|x| seen.binary_search(x).unwrap()).collect::<Vec<_>>());
            let n = c.normalize();
            prop_assert_eq!(n.normalize(), n.clone());
            prop_assert_eq!(n.class_count(), c.class_count());
            for i in 0..c.len() {
                for j in 0..c.len() {
                    prop_assert_eq!(c.color_of(i) == c.color_of(j), n.color_of(i) == n.color_of(j));
                }
            }
        }

        #[test]
        fn validity_invariant_under_edge_relabeling(
            seed in 0usize..1000,
            raw in proptest::collection::vec(0usize..5, 6),
        ) {
            // a fixed 6-edge graph (paw plus pendant) with shuffled edge order
            let base = [(0usize, 1usize), (1, 2), (0, 2), (2, 3), (3, 4), (1, 4)];
            let mut perm: Vec<usize> = (0..6).collect();
            let mut s = seed;
            for i in (1..6).rev() {
                perm.swap(i, s % (i + 1));
                s /= i + 1;
            }
            let mut seen = raw.clone();
            seen.sort_unstable();
            seen.dedup();
            let colors: Vec<usize> = raw.iter().map(|x| seen.binary_search(x).unwrap()).collect();
            let g = Graph::new(5, base).unwrap();
            let h = Graph::new(5, perm.iter().map(|&i| base[i])).unwrap();
            let ch = EdgeColoring::new(perm.iter().map(|&i| colors[i]).collect()).unwrap();
            prop_assert_eq!(
                validate(&g, &col(&colors)).unwrap().valid,
                validate(&h, &ch).unwrap().valid
            );
        }
    }
}
