//! C ABI for `tdec`.
//!
//! Graphs are opaque `TdecGraph` handles owned by the caller and released
//! with [`tdec_graph_free`]. Every fallible call returns a [`TdecStatus`];
//! on failure [`tdec_last_error`] describes the most recent error on the
//! calling thread. Strings returned through `char **` outputs are owned by
//! the caller and released with [`tdec_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use tdec::bounds::{graph_bounds, BoundsError};
use tdec::coloring::{self, EdgeColoring};
use tdec::graph::{parse_edge_list, parse_graph6_line};
use tdec::harness::TransformOp;
use tdec::{Family, Graph, SolveStatus, SolverOptions};

/// Result codes. `TDEC_STATUS_OK` is zero; everything else is an error except
/// where a function documents `TDEC_STATUS_INFEASIBLE` or `TDEC_STATUS_TIMED_OUT` as an
/// outcome.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdecStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    GraphError = 4,
    Infeasible = 5,
    TimedOut = 6,
    InvalidColoring = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct TdecGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn fail(status: TdecStatus, msg: impl Into<String>) -> TdecStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into `TDEC_STATUS_PANIC`.
fn guard(f: impl FnOnce() -> TdecStatus) -> TdecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TdecStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, TdecStatus> {
    if s.is_null() {
        return Err(fail(TdecStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(TdecStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn graph_ref<'a>(g: *const TdecGraph) -> Result<&'a Graph, TdecStatus> {
    g.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(TdecStatus::NullPointer, "null graph handle"))
}

unsafe fn put_graph(out: *mut *mut TdecGraph, g: Graph) -> TdecStatus {
    *out = Box::into_raw(Box::new(TdecGraph { inner: g }));
    TdecStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> TdecStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TdecStatus::Ok
        }
        Err(_) => fail(TdecStatus::Panic, "output contained a nul byte"),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last error on this thread, or NULL. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn tdec_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn tdec_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on `vertex_count` vertices from `edge_count` pairs stored
/// flat in `pairs` (`2 * edge_count` entries).
///
/// # Safety
/// `pairs` must point to `2 * edge_count` readable values (or may be NULL
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_new(
    vertex_count: usize,
    pairs: *const usize,
    edge_count: usize,
    out: *mut *mut TdecGraph,
) -> TdecStatus {
    guard(|| {
        if out.is_null() || (pairs.is_null() && edge_count > 0) {
            return fail(TdecStatus::NullPointer, "null argument");
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        match Graph::new(vertex_count, flat.chunks_exact(2).map(|p| (p[0], p[1]))) {
            Ok(g) => put_graph(out, g),
            Err(e) => fail(TdecStatus::GraphError, e.to_string()),
        }
    })
}

/// Parses the `p n m` / `e u v` edge-list format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut TdecGraph,
) -> TdecStatus {
    guard(|| {
        let text = tri!(read_str(text));
        if out.is_null() {
            return fail(TdecStatus::NullPointer, "null output");
        }
        match parse_edge_list(text) {
            Ok(g) => put_graph(out, g),
            Err(e) => fail(TdecStatus::ParseError, e.to_string()),
        }
    })
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut TdecGraph,
) -> TdecStatus {
    guard(|| {
        let text = tri!(read_str(text));
        if out.is_null() {
            return fail(TdecStatus::NullPointer, "null output");
        }
        match parse_graph6_line(text.trim(), 1) {
            Ok(g) => put_graph(out, g),
            Err(e) => fail(TdecStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds a family graph from a spec such as `"wheel:5"`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_from_family(
    spec: *const c_char,
    out: *mut *mut TdecGraph,
) -> TdecStatus {
    guard(|| {
        let spec = tri!(read_str(spec));
        if out.is_null() {
            return fail(TdecStatus::NullPointer, "null output");
        }
        let family: Family = match spec.parse() {
            Ok(f) => f,
            Err(e) => return fail(TdecStatus::ParseError, format!("{e}")),
        };
        match family.build() {
            Ok(g) => put_graph(out, g),
            Err(e) => fail(TdecStatus::GraphError, e.to_string()),
        }
    })
}

/// Applies `subdivide:K`, `delete-vertex:V`, `delete-edge:U-V` or
/// `contract:U-V`, producing a new handle.
///
/// # Safety
/// `graph` must be a live handle or NULL; `op` a nul-terminated string;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_transform(
    graph: *const TdecGraph,
    op: *const c_char,
    out: *mut *mut TdecGraph,
) -> TdecStatus {
    guard(|| {
        let g = tri!(graph_ref(graph));
        let op = tri!(read_str(op));
        if out.is_null() {
            return fail(TdecStatus::NullPointer, "null output");
        }
        let op: TransformOp = match op.parse() {
            Ok(op) => op,
            Err(e) => return fail(TdecStatus::ParseError, format!("{e}")),
        };
        match op.apply(g) {
            Ok(h) => put_graph(out, h),
            Err(e) => fail(TdecStatus::GraphError, e.to_string()),
        }
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_free(graph: *mut TdecGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `graph` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_vertex_count(graph: *const TdecGraph) -> usize {
    graph.as_ref().map_or(0, |h| h.inner.vertex_count())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `graph` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn tdec_graph_edge_count(graph: *const TdecGraph) -> usize {
    graph.as_ref().map_or(0, |h| h.inner.edge_count())
}

fn options(timeout_seconds: f64) -> SolverOptions {
    SolverOptions {
        // non-positive or non-finite means no limit
        timeout: Duration::try_from_secs_f64(timeout_seconds)
            .ok()
            .filter(|d| !d.is_zero()),
        ..Default::default()
    }
}

/// Exact TDEC. On `TDEC_STATUS_OK` writes the value and, when `colors` is not
/// NULL, a witness with one color per edge (`edge_count` entries). Returns
/// `TDEC_STATUS_INFEASIBLE` for graphs with a K2 component and `TDEC_STATUS_TIMED_OUT`
/// when `timeout_seconds` (0 for none) runs out; in the latter case `value`
/// receives the best proven upper bound and `colors` its witness.
///
/// # Safety
/// `graph` must be a live handle; `value` writable; `colors` NULL or
/// writable for `edge_count` entries.
#[no_mangle]
pub unsafe extern "C" fn tdec_solve(
    graph: *const TdecGraph,
    timeout_seconds: f64,
    value: *mut usize,
    colors: *mut usize,
) -> TdecStatus {
    guard(|| {
        let g = tri!(graph_ref(graph));
        if value.is_null() {
            return fail(TdecStatus::NullPointer, "null value output");
        }
        let r = tdec::solve_exact(g, &options(timeout_seconds));
        let write_witness = |w: &Option<EdgeColoring>| {
            if let (Some(w), false) = (w, colors.is_null()) {
                std::slice::from_raw_parts_mut(colors, w.len()).copy_from_slice(w.colors());
            }
        };
        match r.status {
            SolveStatus::Exact => {
                *value = r.value.expect("exact has a value");
                write_witness(&r.witness);
                TdecStatus::Ok
            }
            SolveStatus::Infeasible => fail(TdecStatus::Infeasible, "graph has a K2 component"),
            SolveStatus::TimedOut => {
                *value = r.proven_upper;
                write_witness(&r.witness);
                fail(
                    TdecStatus::TimedOut,
                    format!(
                        "timed out with bracket [{}, {}]",
                        r.proven_lower, r.proven_upper
                    ),
                )
            }
        }
    })
}

/// The full solve result as JSON. Status follows [`tdec_solve`]; the JSON
/// is written in every non-error case.
///
/// # Safety
/// `graph` must be a live handle; `json` writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_solve_json(
    graph: *const TdecGraph,
    timeout_seconds: f64,
    json: *mut *mut c_char,
) -> TdecStatus {
    guard(|| {
        let g = tri!(graph_ref(graph));
        if json.is_null() {
            return fail(TdecStatus::NullPointer, "null json output");
        }
        let r = tdec::solve_exact(g, &options(timeout_seconds));
        let s = tri!(serde_json::to_string(&r).map_err(|e| fail(TdecStatus::Panic, e.to_string())));
        tri!(Ok::<_, TdecStatus>(put_string(json, s)));
        match r.status {
            SolveStatus::Exact => TdecStatus::Ok,
            SolveStatus::Infeasible => fail(TdecStatus::Infeasible, "graph has a K2 component"),
            SolveStatus::TimedOut => fail(TdecStatus::TimedOut, "timed out"),
        }
    })
}

/// Checks `len` colors (one per edge) and stores whether they form a
/// TDE-coloring. Returns `TDEC_STATUS_INVALID_COLORING` when the colors are not
/// `0..k` with every color used, or `len` differs from the edge count.
///
/// # Safety
/// `graph` must be a live handle; `colors` readable for `len` entries;
/// `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_validate(
    graph: *const TdecGraph,
    colors: *const usize,
    len: usize,
    valid: *mut bool,
) -> TdecStatus {
    guard(|| {
        let g = tri!(graph_ref(graph));
        if valid.is_null() || (colors.is_null() && len > 0) {
            return fail(TdecStatus::NullPointer, "null argument");
        }
        let colors = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(colors, len).to_vec()
        };
        let c = match EdgeColoring::new(colors) {
            Ok(c) => c,
            Err(e) => return fail(TdecStatus::InvalidColoring, e.to_string()),
        };
        match coloring::validate(g, &c) {
            Ok(report) => {
                *valid = report.valid;
                TdecStatus::Ok
            }
            Err(e) => fail(TdecStatus::InvalidColoring, e.to_string()),
        }
    })
}

/// Every known bound for the graph as JSON.
///
/// # Safety
/// `graph` must be a live handle; `json` writable.
#[no_mangle]
pub unsafe extern "C" fn tdec_bounds_json(
    graph: *const TdecGraph,
    json: *mut *mut c_char,
) -> TdecStatus {
    guard(|| {
        let g = tri!(graph_ref(graph));
        if json.is_null() {
            return fail(TdecStatus::NullPointer, "null json output");
        }
        match graph_bounds(g) {
            Ok(r) => put_string(json, serde_json::to_string(&r).expect("report serializes")),
            Err(BoundsError::Infeasible) => {
                fail(TdecStatus::Infeasible, "graph has a K2 component")
            }
            Err(e) => fail(TdecStatus::GraphError, e.to_string()),
        }
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tdec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
