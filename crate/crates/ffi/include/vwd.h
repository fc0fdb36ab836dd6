#ifndef VWD_H
#define VWD_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VwdStatus {
  VWD_STATUS_OK = 0,
  VWD_STATUS_NULL_POINTER = 1,
  VWD_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, bad dimensions, vertices or permutations.
   */
  VWD_STATUS_INVALID_INPUT = 3,
  /**
   * The operation needs an acyclic graph.
   */
  VWD_STATUS_CYCLIC = 4,
  VWD_STATUS_BUDGET_EXCEEDED = 5,
  /**
   * A formula or internal consistency check failed.
   */
  VWD_STATUS_INTERNAL = 6,
  VWD_STATUS_PANIC = 7,
} VwdStatus;

/**
 * Opaque weighted digraph.
 */
typedef struct VwdGraph VwdGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call.
 */
const char *vwd_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void vwd_string_free(char *s);

/**
 * Parses graph JSON (`{"omega":[..],"edges":[{"from":1,"to":2,"weight":"10"}]}`).
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum VwdStatus vwd_graph_from_json(const char *json, struct VwdGraph **out);

/**
 * # Safety
 * `graph` must be a live handle and `out` writable.
 */
enum VwdStatus vwd_graph_to_json(const struct VwdGraph *graph, char **out);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void vwd_graph_free(struct VwdGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle and `out` writable.
 */
enum VwdStatus vwd_graph_vertex_count(const struct VwdGraph *graph, size_t *out);

/**
 * # Safety
 * `graph` must be a live handle and `out` writable.
 */
enum VwdStatus vwd_graph_is_acyclic(const struct VwdGraph *graph, bool *out);

/**
 * # Safety
 * Both handles must be live and `out` writable.
 */
enum VwdStatus vwd_graph_equal(const struct VwdGraph *a, const struct VwdGraph *b, bool *out);

/**
 * Applies an operation given as JSON, e.g.
 * `{"op":"sigma-k-lc","vertex":4,"sigma":[2,3,1],"k":2}`. The result is a
 * new handle; the input is unchanged.
 *
 * # Safety
 * `graph` must be a live handle, `op_json` nul-terminated, `out` writable.
 */
enum VwdStatus vwd_graph_apply(const struct VwdGraph *graph,
                               const char *op_json,
                               struct VwdGraph **out);

/**
 * Canonical representative and size of the equivalence class of `graph`.
 *
 * # Safety
 * `graph` must be a live handle; `canonical` and `size` writable.
 */
enum VwdStatus vwd_orbit(const struct VwdGraph *graph, struct VwdGraph **canonical, size_t *size);

/**
 * Number of equivalence classes for the dimension function `dims[0..len]`.
 *
 * # Safety
 * `dims` must point to `len` values and `out` be writable.
 */
enum VwdStatus vwd_count_classes(const size_t *dims, size_t len, uint64_t *out);

/**
 * Number of acyclic weighted digraphs for `dims[0..len]`, as a decimal string.
 *
 * # Safety
 * `dims` must point to `len` values and `out` be writable.
 */
enum VwdStatus vwd_count_m_omega(const size_t *dims, size_t len, char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum VwdStatus vwd_count_two_simplices(uint64_t n1, uint64_t n2, uint64_t *out);

/**
 * Closed-form class count for three simplices (`n1 <= n2 <= n3`), as a
 * decimal string.
 *
 * # Safety
 * `out` must be writable.
 */
enum VwdStatus vwd_count_three_simplices(uint64_t n1, uint64_t n2, uint64_t n3, char **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum VwdStatus vwd_count_type8(uint64_t n, uint64_t *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum VwdStatus vwd_f_closed(uint64_t n, uint64_t *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum VwdStatus vwd_h_closed(uint64_t n, uint64_t m, uint64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* VWD_H */
