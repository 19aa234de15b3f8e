//! Theorem-check suites and their reports.
//!
//! A suite expands into instances, runs them on a rayon pool (capped by the
//! `TDEC_THREADS` environment variable) and collects [`CheckRecord`]s in
//! instance order. Every record carries the numbers it was judged on and the
//! relation they must satisfy, so [`CheckRecord::recheck`] can recompute the
//! verdict without re-running anything.

mod files;
mod report;
mod suites;

use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::MAX_ENUMERATION_VERTICES;
use crate::solver::MAX_SEARCH_EDGES;

pub use files::{parse_coloring, parse_graph_text, read_graph, FileError, TransformOp};
pub use report::{Format, Report, Summary};
pub use suites::SUITES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}; known suites: {list}", list = SUITES.join(", "))]
    UnknownSuite(String),
    #[error("{what} cap {got} exceeds the hard limit {cap}")]
    SizeCapExceeded {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}

/// How a record's observed numbers are judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// All observed values are equal.
    AllEqual,
    /// `observed[0] <= observed[1]`.
    AtMost,
    /// `observed[0] <= observed[1] <= observed[2]`.
    Between,
    /// `observed[0] > observed[1]`.
    Exceeds,
}

impl Relation {
    pub fn holds(self, observed: &[i64]) -> bool {
        match (self, observed) {
            (Relation::AllEqual, [first, rest @ ..]) => rest.iter().all(|x| x == first),
            (Relation::AtMost, [a, b]) => a <= b,
            (Relation::Between, [lo, x, hi]) => lo <= x && x <= hi,
            (Relation::Exceeds, [a, b]) => a > b,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Side condition not met, over a size cap, or timed out.
    Skipped,
}

/// One checked instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub theorem_id: String,
    pub instance: String,
    /// Human-readable statement of what `observed` must satisfy.
    pub expected: String,
    pub relation: Relation,
    /// Values in the order the relation reads them; -1 stands for "no
    /// TDE-coloring exists".
    pub observed: Vec<i64>,
    pub verdict: Verdict,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    /// Wall time in milliseconds; absent when metadata is suppressed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

impl CheckRecord {
    pub(crate) fn judged(
        theorem_id: &str,
        instance: String,
        expected: &str,
        relation: Relation,
        observed: Vec<i64>,
    ) -> Self {
        let pass = relation.holds(&observed);
        CheckRecord {
            theorem_id: theorem_id.to_string(),
            instance,
            expected: expected.to_string(),
            relation,
            observed,
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            pass,
            note: String::new(),
            runtime_ms: None,
        }
    }

    pub(crate) fn skipped(
        theorem_id: &str,
        instance: String,
        expected: &str,
        relation: Relation,
        note: String,
    ) -> Self {
        CheckRecord {
            theorem_id: theorem_id.to_string(),
            instance,
            expected: expected.to_string(),
            relation,
            observed: Vec::new(),
            verdict: Verdict::Skipped,
            pass: true,
            note,
            runtime_ms: None,
        }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// True iff the stored verdict agrees with the relation applied to the
    /// stored observations.
    pub fn recheck(&self) -> bool {
        match self.verdict {
            Verdict::Skipped => self.pass && self.observed.is_empty(),
            Verdict::Pass => self.pass && self.relation.holds(&self.observed),
            Verdict::Fail => !self.pass && !self.relation.holds(&self.observed),
        }
    }
}

/// Scale and limits for a suite run. `None` means the suite's own default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub timeout: Duration,
    /// Instances needing an exact solve on more edges are skipped.
    pub max_solve_edges: Option<usize>,
    /// Order of the labeled corpus for the surgery and oracle suites.
    pub max_enum_vertices: usize,
    /// Largest family parameter; each suite documents what it scales.
    pub max_n: Option<usize>,
    /// Worker threads; `None` reads `TDEC_THREADS`, then uses rayon's default.
    pub threads: Option<usize>,
}

pub const DEFAULT_SOLVE_EDGES: usize = 16;
pub const DEFAULT_ENUM_VERTICES: usize = 5;

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            timeout: Duration::from_secs(60),
            max_solve_edges: None,
            max_enum_vertices: DEFAULT_ENUM_VERTICES,
            max_n: None,
            threads: None,
        }
    }
}

impl RunConfig {
    fn check(&self) -> Result<(), HarnessError> {
        if let Some(m) = self.max_solve_edges.filter(|&m| m > MAX_SEARCH_EDGES) {
            return Err(HarnessError::SizeCapExceeded {
                what: "exact solve edge",
                got: m,
                cap: MAX_SEARCH_EDGES,
            });
        }
        if self.max_enum_vertices > MAX_ENUMERATION_VERTICES {
            return Err(HarnessError::SizeCapExceeded {
                what: "enumeration vertex",
                got: self.max_enum_vertices,
                cap: MAX_ENUMERATION_VERTICES,
            });
        }
        Ok(())
    }

    fn thread_count(&self) -> Option<usize> {
        self.threads.or_else(|| {
            std::env::var("TDEC_THREADS")
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .filter(|&n| n > 0)
        })
    }
}

/// Runs one suite and returns its report.
pub fn run_suite(suite: &str, config: &RunConfig) -> Result<Report, HarnessError> {
    config.check()?;
    let tasks = suites::tasks(suite, config)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.thread_count() {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| HarnessError::ThreadPool(e.to_string()))?;
    let start = std::time::Instant::now();
    let records = pool.install(|| {
        use rayon::prelude::*;
        tasks.into_par_iter().map(|t| t()).collect::<Vec<_>>()
    });
    Ok(Report::new(
        suite,
        records.into_iter().flatten().collect(),
        start.elapsed(),
        pool.current_num_threads(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        assert!(Relation::AllEqual.holds(&[3, 3, 3]));
        assert!(!Relation::AllEqual.holds(&[3, 4]));
        assert!(!Relation::AllEqual.holds(&[]));
        assert!(Relation::AtMost.holds(&[2, 2]));
        assert!(!Relation::AtMost.holds(&[2]));
        assert!(Relation::Between.holds(&[1, 2, 3]));
        assert!(!Relation::Between.holds(&[1, 4, 3]));
        assert!(Relation::Exceeds.holds(&[11, 10]));
        assert!(!Relation::Exceeds.holds(&[10, 10]));
    }

    #[test]
    fn records_recheck() {
        let r = CheckRecord::judged("t", "i".into(), "a <= b", Relation::AtMost, vec![1, 2]);
        assert!(r.pass && r.recheck());
        let mut forged = r.clone();
        forged.observed = vec![3, 2];
        assert!(!forged.recheck());
        let f = CheckRecord::judged("t", "i".into(), "a <= b", Relation::AtMost, vec![3, 2]);
        assert!(!f.pass && f.recheck());
        let s = CheckRecord::skipped("t", "i".into(), "a <= b", Relation::AtMost, "bridge".into());
        assert!(s.recheck());
    }

    #[test]
    fn caps_are_checked() {
        let cfg = RunConfig {
            max_enum_vertices: 9,
            ..Default::default()
        };
        assert!(matches!(
            run_suite("edge-removal", &cfg),
            Err(HarnessError::SizeCapExceeded { .. })
        ));
        let cfg = RunConfig {
            max_solve_edges: Some(500),
            ..Default::default()
        };
        assert!(run_suite("star", &cfg).is_err());
        assert!(matches!(
            run_suite("nope", &RunConfig::default()),
            Err(HarnessError::UnknownSuite(_))
        ));
    }
}
