//! Compiles a small C program against the generated header and static
//! library. Skipped when no C compiler is on PATH.

use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include "tdec.h"

int main(void) {
    TdecGraph *g = NULL;
    size_t value = 0;
    size_t colors[10];
    if (tdec_graph_from_family("wheel:6", &g) != TDEC_STATUS_OK) return 10;
    if (tdec_solve(g, 10.0, &value, colors) != TDEC_STATUS_OK) return 11;
    tdec_graph_free(g);
    if (tdec_graph_from_family("path:2", &g) != TDEC_STATUS_OK) return 12;
    if (tdec_solve(g, 1.0, &value, NULL) != TDEC_STATUS_INFEASIBLE) return 13;
    tdec_graph_free(g);
    printf("%zu\n", value);
    return 0;
}
"#;

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"].into_iter().find(|c| {
        Command::new(c)
            .arg("--version")
            .output()
            .is_ok_and(|o| o.status.success())
    })
}

/// Integration tests only link the rlib, so build the static library into a
/// separate target dir (the outer cargo holds the lock on the main one).
fn static_lib() -> PathBuf {
    let target = Path::new(env!("CARGO_TARGET_TMPDIR")).join("c-abi");
    let out = Command::new(env!("CARGO"))
        .args([
            "build",
            "--quiet",
            "-p",
            "tdec-ffi",
            "--lib",
            "--target-dir",
        ])
        .arg(&target)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    target.join("debug/libtdec_ffi.a")
}

#[test]
fn header_compiles_and_links() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let lib = static_lib();
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let bin = dir.path().join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let out = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let run = Command::new(&bin).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "5\n");
}
