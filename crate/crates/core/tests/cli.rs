use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

use tdec::harness::{Report, Verdict};

fn tdec<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_tdec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn gen(dir: &TempDir, spec: &str) -> PathBuf {
    let path = dir.path().join(spec.replace([':', ','], "_"));
    let o = tdec(["gen", spec, "-o", path.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_writes_edge_lists() {
    let dir = TempDir::new().unwrap();
    let text = std::fs::read_to_string(gen(&dir, "path:7")).unwrap();
    assert!(text.starts_with("p 7 6\n"));
    let text = std::fs::read_to_string(gen(&dir, "wheel:5")).unwrap();
    assert!(text.starts_with("p 5 8\n"));
    let text = std::fs::read_to_string(gen(&dir, "friendship:3")).unwrap();
    assert!(text.starts_with("p 7 9\n"));
    assert_eq!(tdec(["gen", "wheel:3"]).status.code(), Some(1));
    assert_eq!(tdec(["gen", "blob:3"]).status.code(), Some(1));
}

#[test]
fn solve_exit_codes() {
    let dir = TempDir::new().unwrap();
    let o = tdec(["solve", p(&gen(&dir, "path:5"))]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["value"], 3);

    let o = tdec(["solve", p(&gen(&dir, "cycle:4"))]);
    let v = json(&o);
    assert_eq!(v["value"], 2);
    let colors: Vec<u64> = serde_json::from_value(v["witness"]["colors"].clone()).unwrap();
    // C4 edges in cyclic order are 0-1, 1-2, 2-3, 0-3
    assert!(colors[0] == colors[2] && colors[1] == colors[3] && colors[0] != colors[1]);

    let o = tdec(["solve", p(&gen(&dir, "path:2"))]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["status"], "Infeasible");

    // over the search limit: bracket with a heuristic witness
    let o = tdec(["solve", p(&gen(&dir, "path:200"))]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&o);
    assert_eq!(v["status"], "TimedOut");
    assert!(v["proven_lower"].as_u64() <= v["proven_upper"].as_u64());
    assert_eq!(v["witness"]["k"], v["proven_upper"]);

    let o = tdec(["solve", p(&gen(&dir, "cycle:7")), "--method", "oracle"]);
    assert_eq!(json(&o)["value"], 5);
    let o = tdec([
        "solve",
        p(&gen(&dir, "cycle:7")),
        "--cross-check",
        "--order",
        "input-order",
    ]);
    assert_eq!(json(&o)["oracle_agreement"], true);

    assert_eq!(tdec(["solve", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(tdec(["solve"]).status.code(), Some(1));
}

#[test]
fn contraction_reaches_lower_end() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "cycle:5");
    let c4 = dir.path().join("c4");
    let o = tdec(["transform", p(&c5), "--op", "contract:0-1", "-o", p(&c4)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&c4).unwrap().starts_with("p 4 4\n"));
    let before = json(&tdec(["solve", p(&c5)]))["value"].as_i64().unwrap();
    let after = json(&tdec(["solve", p(&c4)]))["value"].as_i64().unwrap();
    assert_eq!((before, after), (4, 2));
}

#[test]
fn transforms() {
    let dir = TempDir::new().unwrap();
    let o = tdec(["transform", p(&gen(&dir, "star:3")), "--op", "subdivide:3"]);
    assert!(stdout(&o).starts_with("p 10 9\n"));
    let c5 = gen(&dir, "cycle:5");
    assert!(stdout(&tdec(["transform", p(&c5), "--op", "delete-vertex:0"])).starts_with("p 4 3\n"));
    assert!(stdout(&tdec(["transform", p(&c5), "--op", "delete-edge:0-4"])).starts_with("p 5 4\n"));
    assert_eq!(
        tdec(["transform", p(&c5), "--op", "delete-edge:0-2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        tdec(["transform", p(&c5), "--op", "contract:0-9"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        tdec(["transform", p(&c5), "--op", "spin:1"]).status.code(),
        Some(1)
    );
}

#[test]
fn validate_colorings() {
    let dir = TempDir::new().unwrap();
    let p5 = gen(&dir, "path:5");
    let good = dir.path().join("good");
    let c = tdec::coloring::construct_path_tdec(5).unwrap();
    std::fs::write(&good, serde_json::to_string(&c).unwrap()).unwrap();
    let o = tdec(["validate", p(&p5), p(&good)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["valid"], true);

    let bad = dir.path().join("bad");
    std::fs::write(&bad, "0 1 0 1\n").unwrap();
    let o = tdec(["validate", p(&p5), p(&bad)]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(json(&o)["valid"], false);

    std::fs::write(&bad, "0 1\n").unwrap();
    assert_eq!(tdec(["validate", p(&p5), p(&bad)]).status.code(), Some(1));
}

#[test]
fn bounds_report() {
    let dir = TempDir::new().unwrap();
    let o = tdec(["bounds", p(&gen(&dir, "wheel:6"))]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(
        (v["best_lower"].as_u64(), v["best_upper"].as_u64()),
        (Some(5), Some(5))
    );
    assert!(v["lower"]
        .as_array()
        .unwrap()
        .iter()
        .any(|b| b["theorem"] == "wheel-formula"));
    assert_eq!(
        tdec(["bounds", p(&gen(&dir, "path:2"))]).status.code(),
        Some(2)
    );
}

#[test]
fn graph6_input() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("k4.g6");
    let o = tdec(["gen", "complete:4", "--format", "graph6", "-o", p(&file)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&file).unwrap(), "C~\n");
    assert_eq!(json(&tdec(["solve", p(&file)]))["value"], 3);
}

#[test]
fn verify_is_reproducible() {
    let a = tdec(["verify", "wheel", "--no-meta"]);
    let b = Command::new(env!("CARGO_BIN_EXE_tdec"))
        .args(["verify", "wheel", "--no-meta"])
        .env("TDEC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let with_meta = json(&tdec(["verify", "wheel"]));
    assert!(with_meta["meta"]["elapsed_ms"].is_number());
}

#[test]
fn verify_formats_agree() {
    let args = ["verify", "bipartite-bounds", "--no-meta", "--format"];
    let j = tdec(args.iter().copied().chain(["json"]));
    let c = tdec(args.iter().copied().chain(["csv"]));
    let report: Report = serde_json::from_slice(&j.stdout).unwrap();
    let rows = Report::records_from_csv(&stdout(&c)).unwrap();
    assert_eq!(report.records, rows);
    assert_eq!(report.records.len(), 8);
    let t = stdout(&tdec(args.iter().copied().chain(["table"])));
    assert!(t.ends_with("bipartite-bounds: 8 records, 8 passed, 0 failed, 0 skipped\n"));
}

#[test]
fn verify_exit_code_tracks_failures() {
    for suite in ["path-formula", "star", "subdiv-star-13"] {
        let o = tdec(["verify", suite, "--no-meta"]);
        let r: Report = serde_json::from_slice(&o.stdout).unwrap();
        assert!(r.records.iter().all(|x| x.recheck()));
        let failed = r.records.iter().any(|x| x.verdict == Verdict::Fail);
        assert_eq!(o.status.code(), Some(if failed { 4 } else { 0 }), "{suite}");
    }
    let o = tdec(["verify", "path-formula", "--max-n", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(tdec(["verify", "no-such-suite"]).status.code(), Some(1));
    assert_eq!(
        tdec(["verify", "star", "--max-vertices", "9"])
            .status
            .code(),
        Some(1)
    );
    let list = stdout(&tdec(["verify", "list"]));
    assert_eq!(list.lines().count(), 20);
}
