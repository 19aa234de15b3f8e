use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use super::{CheckRecord, Relation, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(format!(
                "unknown format {other:?}; expected json, csv or table"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    pub started_unix_s: u64,
    pub elapsed_ms: f64,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
    pub summary: Summary,
    pub records: Vec<CheckRecord>,
}

/// Flat CSV row; `observed` is `;`-joined.
#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    theorem_id: String,
    instance: String,
    expected: String,
    relation: Relation,
    observed: String,
    verdict: Verdict,
    pass: bool,
    note: String,
    runtime_ms: Option<f64>,
}

impl Report {
    pub(crate) fn new(
        suite: &str,
        records: Vec<CheckRecord>,
        elapsed: Duration,
        threads: usize,
    ) -> Self {
        let mut summary = Summary {
            total: records.len(),
            ..Default::default()
        };
        for r in &records {
            match r.verdict {
                Verdict::Pass => summary.passed += 1,
                Verdict::Fail => summary.failed += 1,
                Verdict::Skipped => summary.skipped += 1,
            }
        }
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .unwrap_or_default();
        Report {
            suite: suite.to_string(),
            meta: Some(Meta {
                version: env!("CARGO_PKG_VERSION").to_string(),
                started_unix_s: now.saturating_sub(elapsed).as_secs(),
                elapsed_ms: elapsed.as_secs_f64() * 1e3,
                threads,
            }),
            summary,
            records,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    /// Drops timestamps and runtimes so identical runs serialize
    /// byte-identically.
    pub fn without_meta(mut self) -> Self {
        self.meta = None;
        self.records.iter_mut().for_each(|r| r.runtime_ms = None);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Table => self.to_table(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            w.serialize(CsvRow {
                theorem_id: r.theorem_id.clone(),
                instance: r.instance.clone(),
                expected: r.expected.clone(),
                relation: r.relation,
                observed: join(&r.observed, ";"),
                verdict: r.verdict,
                pass: r.pass,
                note: r.note.clone(),
                runtime_ms: r.runtime_ms,
            })
            .expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }

    /// Records from [`Format::Csv`] output.
    pub fn records_from_csv(text: &str) -> Result<Vec<CheckRecord>, String> {
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        rd.deserialize::<CsvRow>()
            .map(|row| {
                let row = row.map_err(|e| e.to_string())?;
                let observed = row
                    .observed
                    .split(';')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<i64>().map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                Ok(CheckRecord {
                    theorem_id: row.theorem_id,
                    instance: row.instance,
                    expected: row.expected,
                    relation: row.relation,
                    observed,
                    verdict: row.verdict,
                    pass: row.pass,
                    note: row.note,
                    runtime_ms: row.runtime_ms,
                })
            })
            .collect()
    }

    fn to_table(&self) -> String {
        let header = ["theorem", "instance", "observed", "verdict", "expected"];
        let rows: Vec<[String; 5]> = self
            .records
            .iter()
            .map(|r| {
                let verdict = match r.verdict {
                    Verdict::Pass => "pass".to_string(),
                    Verdict::Fail => "FAIL".to_string(),
                    Verdict::Skipped => format!("skip ({})", r.note),
                };
                [
                    r.theorem_id.clone(),
                    r.instance.clone(),
                    join(&r.observed, " "),
                    verdict,
                    r.expected.clone(),
                ]
            })
            .collect();
        let mut width = header.map(str::len);
        for row in &rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let mut line = |cells: [&str; 5]| {
            let mut l = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i == 4 {
                    l.push_str(cell);
                } else {
                    let _ = write!(l, "{cell:<w$}  ", w = width[i]);
                }
            }
            out.push_str(l.trim_end());
            out.push('\n');
        };
        line(header);
        for row in &rows {
            line([&row[0], &row[1], &row[2], &row[3], &row[4]]);
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{}: {} records, {} passed, {} failed, {} skipped",
            self.suite, s.total, s.passed, s.failed, s.skipped
        );
        out
    }
}

fn join(values: &[i64], sep: &str) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut a = CheckRecord::judged(
            "x",
            "P3, \"quoted\"".into(),
            "a == b",
            Relation::AllEqual,
            vec![2, 2],
        );
        a.runtime_ms = Some(0.25);
        let b = CheckRecord::judged("x", "P4".into(), "a <= b", Relation::AtMost, vec![-1, 2])
            .with_note("n");
        let c = CheckRecord::skipped(
            "x",
            "K2".into(),
            "a <= b",
            Relation::AtMost,
            "infeasible".into(),
        );
        Report::new("x", vec![a, b, c], Duration::from_millis(3), 1)
    }

    #[test]
    fn csv_matches_json_records() {
        let r = sample();
        let back: Report = serde_json::from_str(&r.render(Format::Json)).unwrap();
        let from_csv = Report::records_from_csv(&r.render(Format::Csv)).unwrap();
        assert_eq!(back.records, r.records);
        assert_eq!(from_csv, r.records);
    }

    #[test]
    fn meta_can_be_dropped() {
        let r = sample();
        assert_eq!(
            r.summary,
            Summary {
                total: 3,
                passed: 2,
                failed: 0,
                skipped: 1
            }
        );
        let json = r.clone().without_meta().render(Format::Json);
        assert!(!json.contains("meta") && !json.contains("runtime_ms"));
        assert!(r.render(Format::Json).contains("runtime_ms"));
    }

    #[test]
    fn table_layout() {
        let t = sample().render(Format::Table);
        let lines: Vec<&str> = t.lines().collect();
        assert!(lines[0].starts_with("theorem"));
        assert!(lines[3].contains("skip (infeasible)"));
        assert_eq!(lines[4], "x: 3 records, 2 passed, 0 failed, 1 skipped");
        assert_eq!("csv".parse::<Format>(), Ok(Format::Csv));
        assert!("xml".parse::<Format>().is_err());
    }
}
