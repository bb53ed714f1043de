#ifndef RAINBOW_H
#define RAINBOW_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Selector for [`rvc_paper_coloring`].
 */
typedef enum RvcColoringKind {
  /**
   * `n - 2` colors around a diametral geodesic; needs diameter >= 3.
   */
  RVC_COLORING_KIND_DIAMETRAL_GEODESIC = 0,
  /**
   * rvc coloring of the two-layers wheel of rim size `p`.
   */
  RVC_COLORING_KIND_WHEEL2_RVC = 1,
  /**
   * srvc coloring of the two-layers wheel of rim size `p`.
   */
  RVC_COLORING_KIND_WHEEL2_SRVC = 2,
  /**
   * `p`-color rvc coloring of the glued graph `G(p, q)`.
   */
  RVC_COLORING_KIND_GLUED_RVC = 3,
  /**
   * `q`-color srvc coloring of the glued graph `G(p, q)`.
   */
  RVC_COLORING_KIND_GLUED_SRVC = 4,
} RvcColoringKind;

/**
 * Generator selector for [`rvc_graph_family`]. `p` and `q` are
 * `n` (path, cycle, complete, wheel, wheel2), `s, t` (bipartite) or
 * `a, b` (glued).
 */
typedef enum RvcFamily {
  RVC_FAMILY_PATH = 0,
  RVC_FAMILY_CYCLE = 1,
  RVC_FAMILY_COMPLETE = 2,
  RVC_FAMILY_BIPARTITE = 3,
  RVC_FAMILY_WHEEL = 4,
  RVC_FAMILY_WHEEL2 = 5,
  RVC_FAMILY_GLUED = 6,
} RvcFamily;

typedef enum RvcMode {
  /**
   * Some rainbow path per pair.
   */
  RVC_MODE_RVC = 0,
  /**
   * Some rainbow geodesic per pair.
   */
  RVC_MODE_SRVC = 1,
} RvcMode;

typedef enum RvcStatus {
  RVC_STATUS_OK = 0,
  RVC_STATUS_NULL_POINTER = 1,
  RVC_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed edge-list or coloring text.
   */
  RVC_STATUS_PARSE = 3,
  RVC_STATUS_INVALID_ARGUMENT = 4,
  /**
   * The graph is not connected.
   */
  RVC_STATUS_DISCONNECTED = 5,
  /**
   * The input exceeds a size limit of the requested operation.
   */
  RVC_STATUS_TOO_LARGE = 6,
  RVC_STATUS_INTERNAL = 7,
} RvcStatus;

/**
 * Opaque vertex coloring handle.
 */
typedef struct RvcColoring RvcColoring;

/**
 * Opaque graph handle.
 */
typedef struct RvcGraph RvcGraph;

typedef struct RvcCheckResult {
  bool valid;
  /**
   * First failing pair in lexicographic order; meaningful when `!valid`.
   */
  size_t failing_u;
  size_t failing_v;
  size_t pairs_checked;
} RvcCheckResult;

typedef struct RvcSolveResult {
  /**
   * The parameter when `exact`, otherwise a proven lower bound.
   */
  size_t value;
  bool exact;
  uint64_t nodes_explored;
} RvcSolveResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *rvc_last_error_message(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void rvc_string_free(char *s);

/**
 * Parses the edge-list format (`n m` header, then `u v` lines).
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum RvcStatus rvc_graph_parse(const char *text, struct RvcGraph **out);

/**
 * Builds a graph of `order` vertices from `edge_count` pairs stored
 * flat in `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or may be null
 * when `edge_count` is 0) and `out` must be writable.
 */
enum RvcStatus rvc_graph_from_edges(size_t order,
                                    const size_t *edges,
                                    size_t edge_count,
                                    struct RvcGraph **out);

/**
 * Generates a member of a named family.
 *
 * # Safety
 * `out` must be writable.
 */
enum RvcStatus rvc_graph_family(enum RvcFamily family, size_t p, size_t q, struct RvcGraph **out);

/**
 * # Safety
 * `g` must be null or a live handle from this library.
 */
void rvc_graph_free(struct RvcGraph *g);

/**
 * Number of vertices; 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t rvc_graph_order(const struct RvcGraph *g);

/**
 * Number of edges; 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t rvc_graph_edge_count(const struct RvcGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum RvcStatus rvc_graph_diameter(const struct RvcGraph *g, uint32_t *out);

/**
 * Serializes `g` in the edge-list format. Free the result with
 * [`rvc_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum RvcStatus rvc_graph_to_edge_list(const struct RvcGraph *g, char **out);

/**
 * Wraps `len` colors in `1..=palette_size`.
 *
 * # Safety
 * `colors` must point to `len` readable values (or be null when `len` is
 * 0) and `out` must be writable.
 */
enum RvcStatus rvc_coloring_new(const uint32_t *colors,
                                size_t len,
                                size_t palette_size,
                                struct RvcColoring **out);

/**
 * Parses the coloring format (`n k` header, then `vertex color` lines).
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum RvcStatus rvc_coloring_parse(const char *text, struct RvcColoring **out);

/**
 * # Safety
 * `c` must be null or a live handle from this library.
 */
void rvc_coloring_free(struct RvcColoring *c);

/**
 * Number of colored vertices; 0 for null.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t rvc_coloring_len(const struct RvcColoring *c);

/**
 * Palette size `k`; 0 for null.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t rvc_coloring_palette_size(const struct RvcColoring *c);

/**
 * # Safety
 * `c` must be a live handle and `out` writable.
 */
enum RvcStatus rvc_coloring_get(const struct RvcColoring *c, size_t vertex, uint32_t *out);

/**
 * Checks `c` on `g` in `mode`.
 *
 * # Safety
 * `g` and `c` must be live handles and `out` writable.
 */
enum RvcStatus rvc_check(const struct RvcGraph *g,
                         const struct RvcColoring *c,
                         enum RvcMode mode,
                         struct RvcCheckResult *out);

/**
 * Computes rvc or srvc. Zero `max_nodes` or `max_millis` means no limit.
 * Running out of budget is not an error: `exact` is false and `value` is
 * a lower bound. When `witness` is non-null it receives an optimal
 * coloring handle, or null if none was found.
 *
 * # Safety
 * `g` must be a live handle, `out` writable, `witness` null or writable.
 */
enum RvcStatus rvc_solve(const struct RvcGraph *g,
                         enum RvcMode mode,
                         uint64_t max_nodes,
                         uint64_t max_millis,
                         struct RvcSolveResult *out,
                         struct RvcColoring **witness);

/**
 * Materializes an explicit construction on `g`, which must be the graph it
 * is defined for.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum RvcStatus rvc_paper_coloring(const struct RvcGraph *g,
                                  enum RvcColoringKind kind,
                                  size_t p,
                                  size_t q,
                                  struct RvcColoring **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RAINBOW_H */
