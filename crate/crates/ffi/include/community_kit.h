#ifndef COMMUNITY_KIT_H
#define COMMUNITY_KIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bumped on any incompatible change to this interface.
 */
#define CK_ABI_VERSION 1

typedef enum CkEdgeChoice {
  CK_EDGE_CHOICE_V2V3 = 0,
  CK_EDGE_CHOICE_V3V4 = 1,
  CK_EDGE_CHOICE_BOTH = 2,
  CK_EDGE_CHOICE_NEITHER = 3,
} CkEdgeChoice;

typedef enum CkStatus {
  CK_STATUS_OK = 0,
  /**
   * The question has a definite negative answer.
   */
  CK_STATUS_NO_STRUCTURE = 1,
  CK_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Exhaustive search was needed above the vertex cap.
   */
  CK_STATUS_CAP_EXCEEDED = 3,
  CK_STATUS_PANIC = 4,
} CkStatus;

typedef enum CkVariant {
  CK_VARIANT_STRICT = 0,
  CK_VARIANT_GENERALIZED = 1,
} CkVariant;

/**
 * Opaque graph handle.
 */
typedef struct CkGraph CkGraph;

/**
 * Opaque partition handle.
 */
typedef struct CkPartition CkPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

uint32_t ck_abi_version(void);

/**
 * Message for the last failed call on this thread, or an empty string.
 * Valid until the next failing call on the same thread.
 */
const char *ck_last_error_message(void);

/**
 * Parses the edge-list text format.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be valid for writes.
 */
enum CkStatus ck_graph_parse(const char *text, struct CkGraph **out);

/**
 * Builds a graph from `m` edges stored as `2m` consecutive vertex ids.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (or be null when `m` is
 * 0); `out` must be valid for writes.
 */
enum CkStatus ck_graph_from_edges(size_t n, const size_t *edges, size_t m, struct CkGraph **out);

/**
 * # Safety
 * `g` must be a live handle.
 */
size_t ck_graph_vertex_count(const struct CkGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
size_t ck_graph_edge_count(const struct CkGraph *g);

/**
 * Writes the edge-list text of `g` to `*out`; release it with
 * [`ck_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` valid for writes.
 */
enum CkStatus ck_graph_to_text(const struct CkGraph *g, char **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void ck_string_free(char *s);

/**
 * # Safety
 * `g` must be null or a handle that has not been freed.
 */
void ck_graph_free(struct CkGraph *g);

/**
 * Partition from community indices `assign[0..n]`; the indices must be
 * exactly `0..k` for some `k`.
 *
 * # Safety
 * `assign` must point to `n` readable values; `out` must be valid for
 * writes.
 */
enum CkStatus ck_partition_new(const size_t *assign, size_t n, struct CkPartition **out);

/**
 * Community of vertex `v`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid for writes.
 */
enum CkStatus ck_partition_get(const struct CkPartition *p, size_t v, size_t *out);

/**
 * # Safety
 * `p` must be a live handle.
 */
size_t ck_partition_vertex_count(const struct CkPartition *p);

/**
 * # Safety
 * `p` must be a live handle.
 */
size_t ck_partition_k(const struct CkPartition *p);

/**
 * # Safety
 * `p` must be null or a handle that has not been freed.
 */
void ck_partition_free(struct CkPartition *p);

/**
 * Sets `*valid` to whether `p` is a structure of `g` in the given mode.
 *
 * # Safety
 * Handles must be live and `valid` writable.
 */
enum CkStatus ck_verify(const struct CkGraph *g,
                        const struct CkPartition *p,
                        enum CkVariant variant,
                        bool connected,
                        bool *valid);

/**
 * Finds a k-community structure. On [`CkStatus::Ok`] `*out` receives a
 * new partition; [`CkStatus::NoStructure`] and [`CkStatus::CapExceeded`]
 * leave it untouched.
 *
 * # Safety
 * `g` must be a live handle and `out` valid for writes.
 */
enum CkStatus ck_solve(const struct CkGraph *g,
                       size_t k,
                       enum CkVariant variant,
                       bool connected,
                       size_t cap,
                       struct CkPartition **out);

/**
 * The star with `n` leaves.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_generate_star(size_t n, struct CkGraph **out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_generate_gabs(size_t a, size_t b, size_t s, struct CkGraph **out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum CkStatus ck_generate_gpl(size_t p, size_t l, enum CkEdgeChoice edge, struct CkGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COMMUNITY_KIT_H */
