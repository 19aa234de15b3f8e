use std::ffi::{CStr, CString};
use std::ptr;

use tdec_ffi::*;

fn family(spec: &str) -> *mut TdecGraph {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { tdec_graph_from_family(spec.as_ptr(), &mut g) },
        TdecStatus::Ok
    );
    g
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(tdec_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn solve_with_witness() {
    let g = family("wheel:6");
    unsafe {
        assert_eq!(
            (tdec_graph_vertex_count(g), tdec_graph_edge_count(g)),
            (6, 10)
        );
        let mut value = 0;
        let mut colors = vec![usize::MAX; 10];
        assert_eq!(
            tdec_solve(g, 10.0, &mut value, colors.as_mut_ptr()),
            TdecStatus::Ok
        );
        assert_eq!(value, 5);
        assert_eq!(colors.iter().max(), Some(&4));
        let mut valid = false;
        assert_eq!(
            tdec_validate(g, colors.as_ptr(), colors.len(), &mut valid),
            TdecStatus::Ok
        );
        assert!(valid);
        colors[0] = colors[1];
        let st = tdec_validate(g, colors.as_ptr(), colors.len(), &mut valid);
        assert!(st == TdecStatus::InvalidColoring || (st == TdecStatus::Ok && !valid));
        tdec_graph_free(g);
    }
}

#[test]
fn explicit_edges_and_formats() {
    let pairs = [0usize, 1, 1, 2, 2, 3, 3, 0];
    let mut c4 = ptr::null_mut();
    let mut from_text = ptr::null_mut();
    let mut k4 = ptr::null_mut();
    let text = CString::new("p 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n").unwrap();
    let g6 = CString::new("C~").unwrap();
    unsafe {
        assert_eq!(
            tdec_graph_new(4, pairs.as_ptr(), 4, &mut c4),
            TdecStatus::Ok
        );
        assert_eq!(
            tdec_graph_from_edge_list(text.as_ptr(), &mut from_text),
            TdecStatus::Ok
        );
        assert_eq!(tdec_graph_from_graph6(g6.as_ptr(), &mut k4), TdecStatus::Ok);
        let mut v = 0;
        for (g, want) in [(c4, 2), (from_text, 2), (k4, 3)] {
            assert_eq!(tdec_solve(g, 0.0, &mut v, ptr::null_mut()), TdecStatus::Ok);
            assert_eq!(v, want);
            tdec_graph_free(g);
        }
        let loops = [0usize, 0];
        let mut bad = ptr::null_mut();
        assert_eq!(
            tdec_graph_new(2, loops.as_ptr(), 1, &mut bad),
            TdecStatus::GraphError
        );
        assert!(bad.is_null());
    }
}

#[test]
fn infeasible_and_timeout() {
    let k2 = family("path:2");
    let long = family("path:200");
    unsafe {
        let mut v = 0;
        assert_eq!(
            tdec_solve(k2, 1.0, &mut v, ptr::null_mut()),
            TdecStatus::Infeasible
        );
        let mut json = ptr::null_mut();
        assert_eq!(tdec_bounds_json(k2, &mut json), TdecStatus::Infeasible);
        assert!(json.is_null());

        let mut colors = vec![0; 199];
        assert_eq!(
            tdec_solve(long, 1.0, &mut v, colors.as_mut_ptr()),
            TdecStatus::TimedOut
        );
        assert_eq!(colors.iter().max().map(|m| m + 1), Some(v));
        assert!(last_error().starts_with("timed out"));
        tdec_graph_free(k2);
        tdec_graph_free(long);
    }
}

#[test]
fn json_outputs() {
    let g = family("cycle:5");
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(tdec_solve_json(g, 5.0, &mut json), TdecStatus::Ok);
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(v["value"], 4);
        tdec_string_free(json);
        assert_eq!(tdec_bounds_json(g, &mut json), TdecStatus::Ok);
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert!(v["best_lower"].as_u64() <= Some(4));
        tdec_string_free(json);
        tdec_graph_free(g);
    }
}

#[test]
fn transforms_and_errors() {
    let c5 = family("cycle:5");
    unsafe {
        let op = CString::new("contract:0-1").unwrap();
        let mut c4 = ptr::null_mut();
        assert_eq!(
            tdec_graph_transform(c5, op.as_ptr(), &mut c4),
            TdecStatus::Ok
        );
        assert_eq!(tdec_graph_edge_count(c4), 4);
        tdec_graph_free(c4);

        let op = CString::new("spin:1").unwrap();
        assert_eq!(
            tdec_graph_transform(c5, op.as_ptr(), &mut c4),
            TdecStatus::ParseError
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            tdec_graph_transform(ptr::null(), op.as_ptr(), &mut c4),
            TdecStatus::NullPointer
        );
        let spec = CString::new("wheel:3").unwrap();
        assert_eq!(
            tdec_graph_from_family(spec.as_ptr(), &mut c4),
            TdecStatus::ParseError
        );
        tdec_graph_free(c5);
        tdec_graph_free(ptr::null_mut());
        tdec_string_free(ptr::null_mut());
        assert_eq!(tdec_graph_edge_count(ptr::null()), 0);
        assert_eq!(
            CStr::from_ptr(tdec_version()).to_str().unwrap(),
            env!("CARGO_PKG_VERSION")
        );
    }
}
