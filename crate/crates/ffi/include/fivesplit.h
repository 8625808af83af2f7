#ifndef FIVESPLIT_H
#define FIVESPLIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum FsStatus {
  FS_STATUS_OK = 0,
  FS_STATUS_NULL_POINTER = 1,
  FS_STATUS_INVALID_ARGUMENT = 2,
  FS_STATUS_DOMAIN = 3,
  FS_STATUS_PARSE = 4,
  FS_STATUS_UNSUPPORTED = 5,
  FS_STATUS_PANIC = 6,
} FsStatus;

/**
 * A multigraph with optional contract-proof and delete-proof edges.
 */
typedef struct FsGraph FsGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next `fs_` call on the same thread.
 */
const char *fs_last_error(void);

/**
 * A new empty graph. Free with `fs_graph_free`.
 */
struct FsGraph *fs_graph_new(void);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void fs_graph_free(struct FsGraph *g);

/**
 * # Safety
 * `g` must be a live handle.
 */
enum FsStatus fs_graph_add_vertex(struct FsGraph *g, uint32_t v);

/**
 * Adds edge `id` between `u` and `v`; missing endpoints are created.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum FsStatus fs_graph_add_edge(struct FsGraph *g, uint32_t id, uint32_t u, uint32_t v);

/**
 * Replaces the protections. Both masks must name existing edges.
 *
 * # Safety
 * `g` must be a live handle.
 */
enum FsStatus fs_graph_set_protection(struct FsGraph *g,
                                      uint64_t contract_proof,
                                      uint64_t delete_proof);

/**
 * Parses the native text format or graph6 into a new handle.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a writable pointer.
 */
enum FsStatus fs_graph_parse(const char *text, struct FsGraph **out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum FsStatus fs_graph_num_edges(const struct FsGraph *g, size_t *out);

/**
 * The Kirchhoff polynomial as text. Free the string with `fs_string_free`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum FsStatus fs_kirchhoff(const struct FsGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fs_string_free(char *s);

/**
 * Whether the 5-configuration `config` splits, honouring protections.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum FsStatus fs_config_splits(const struct FsGraph *g, uint64_t config, bool *out);

/**
 * Whether every 5-configuration splits. When one does not, its mask is
 * written to `failing` (if non-null); otherwise `failing` receives 0.
 *
 * # Safety
 * `g` must be a live handle, `out` writable, `failing` null or writable.
 */
enum FsStatus fs_graph_splits(const struct FsGraph *g, bool *out, uint64_t *failing);

/**
 * Exact width of a connected graph.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum FsStatus fs_width(const struct FsGraph *g, size_t *out);

/**
 * Whether no member of F0 is a minor of the graph.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum FsStatus fs_f0_free(const struct FsGraph *g, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIVESPLIT_H */
