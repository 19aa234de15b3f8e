#ifndef TDEC_H
#define TDEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>

// Result codes. `TDEC_STATUS_OK` is zero; everything else is an error except
// where a function documents `TDEC_STATUS_INFEASIBLE` or `TDEC_STATUS_TIMED_OUT` as an
// outcome.
typedef enum TdecStatus {
  TDEC_STATUS_OK = 0,
  TDEC_STATUS_NULL_POINTER = 1,
  TDEC_STATUS_INVALID_UTF8 = 2,
  TDEC_STATUS_PARSE_ERROR = 3,
  TDEC_STATUS_GRAPH_ERROR = 4,
  TDEC_STATUS_INFEASIBLE = 5,
  TDEC_STATUS_TIMED_OUT = 6,
  TDEC_STATUS_INVALID_COLORING = 7,
  TDEC_STATUS_PANIC = 8,
} TdecStatus;

// Opaque graph handle.
typedef struct TdecGraph TdecGraph;

// Message for the last error on this thread, or NULL. Valid until the next
// failing call on the same thread.
const char *tdec_last_error(void);

// Library version as a static string.
const char *tdec_version(void);

// Builds a graph on `vertex_count` vertices from `edge_count` pairs stored
// flat in `pairs` (`2 * edge_count` entries).
//
// # Safety
// `pairs` must point to `2 * edge_count` readable values (or may be NULL
// when `edge_count` is 0); `out` must be writable.
enum TdecStatus tdec_graph_new(size_t vertex_count,
                               const size_t *pairs,
                               size_t edge_count,
                               struct TdecGraph **out);

// Parses the `p n m` / `e u v` edge-list format.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum TdecStatus tdec_graph_from_edge_list(const char *text, struct TdecGraph **out);

// Parses one graph6 line.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum TdecStatus tdec_graph_from_graph6(const char *text, struct TdecGraph **out);

// Builds a family graph from a spec such as `"wheel:5"`.
//
// # Safety
// `spec` must be a nul-terminated string; `out` must be writable.
enum TdecStatus tdec_graph_from_family(const char *spec, struct TdecGraph **out);

// Applies `subdivide:K`, `delete-vertex:V`, `delete-edge:U-V` or
// `contract:U-V`, producing a new handle.
//
// # Safety
// `graph` must be a live handle or NULL; `op` a nul-terminated string;
// `out` writable.
enum TdecStatus tdec_graph_transform(const struct TdecGraph *graph,
                                     const char *op,
                                     struct TdecGraph **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `graph` must come from this library and not be used afterwards.
void tdec_graph_free(struct TdecGraph *graph);

// Vertex count, or 0 for NULL.
//
// # Safety
// `graph` must be a live handle or NULL.
size_t tdec_graph_vertex_count(const struct TdecGraph *graph);

// Edge count, or 0 for NULL.
//
// # Safety
// `graph` must be a live handle or NULL.
size_t tdec_graph_edge_count(const struct TdecGraph *graph);

// Exact TDEC. On `TDEC_STATUS_OK` writes the value and, when `colors` is not
// NULL, a witness with one color per edge (`edge_count` entries). Returns
// `TDEC_STATUS_INFEASIBLE` for graphs with a K2 component and `TDEC_STATUS_TIMED_OUT`
// when `timeout_seconds` (0 for none) runs out; in the latter case `value`
// receives the best proven upper bound and `colors` its witness.
//
// # Safety
// `graph` must be a live handle; `value` writable; `colors` NULL or
// writable for `edge_count` entries.
enum TdecStatus tdec_solve(const struct TdecGraph *graph,
                           double timeout_seconds,
                           size_t *value,
                           size_t *colors);

// The full solve result as JSON. Status follows [`tdec_solve`]; the JSON
// is written in every non-error case.
//
// # Safety
// `graph` must be a live handle; `json` writable.
enum TdecStatus tdec_solve_json(const struct TdecGraph *graph, double timeout_seconds, char **json);

// Checks `len` colors (one per edge) and stores whether they form a
// TDE-coloring. Returns `TDEC_STATUS_INVALID_COLORING` when the colors are not
// `0..k` with every color used, or `len` differs from the edge count.
//
// # Safety
// `graph` must be a live handle; `colors` readable for `len` entries;
// `valid` writable.
enum TdecStatus tdec_validate(const struct TdecGraph *graph,
                              const size_t *colors,
                              size_t len,
                              bool *valid);

// Every known bound for the graph as JSON.
//
// # Safety
// `graph` must be a live handle; `json` writable.
enum TdecStatus tdec_bounds_json(const struct TdecGraph *graph, char **json);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void tdec_string_free(char *s);

#endif  /* TDEC_H */
