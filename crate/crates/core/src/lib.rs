//! Total dominator edge chromatic number (TDEC) of small simple graphs.
//!
//! A TDE-coloring is a proper edge coloring where every edge is adjacent to
//! all edges of at least one color class; TDEC is the least number of
//! classes such a coloring needs.
//!
//! - [`graph`]: graphs, families, file formats, deletion, contraction and
//!   subdivision.
//! - [`coloring`]: edge colorings and the TDE validator.
//! - [`bounds`]: closed forms and bounds.
//! - [`solver`]: exact branch-and-bound plus brute-force oracles.
//! - [`harness`]: theorem-check suites used by the CLI.

pub mod bounds;
pub mod coloring;
pub mod graph;
pub mod harness;
pub mod solver;

pub use coloring::{EdgeColoring, TdeReport};
pub use graph::{Family, Graph, GraphError};
pub use solver::{solve_exact, SolveResult, SolveStatus, SolverOptions};
