/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef ZEROFORCE_H
#define ZEROFORCE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The library error variants map one to one; the last three
 * are boundary failures.
 */
typedef enum ZfStatus {
  ZF_STATUS_OK = 0,
  ZF_STATUS_NOT_A_CLUTTER = 1,
  ZF_STATUS_EMPTY_EDGE = 2,
  ZF_STATUS_VERTEX_OUT_OF_RANGE = 3,
  ZF_STATUS_GROUND_SET_TOO_LARGE = 4,
  ZF_STATUS_RULE_NOT_APPLICABLE = 5,
  ZF_STATUS_EMPTY_SET = 6,
  ZF_STATUS_NOT_AN_EDGE = 7,
  ZF_STATUS_EMPTY_MEMBER = 8,
  ZF_STATUS_OUT_OF_RANGE = 9,
  ZF_STATUS_SEARCH_BOUND_EXCEEDED = 10,
  ZF_STATUS_NOT_REALIZABLE = 11,
  ZF_STATUS_PARSE = 12,
  ZF_STATUS_NULL_POINTER = 13,
  ZF_STATUS_INVALID_ARGUMENT = 14,
  ZF_STATUS_PANIC = 15,
} ZfStatus;

typedef enum ZfRule {
  ZF_RULE_R0 = 0,
  ZF_RULE_R1 = 1,
  ZF_RULE_R2 = 2,
} ZfRule;

/**
 * Opaque clutter handle.
 */
typedef struct ZfClutter ZfClutter;

/**
 * Opaque hypergraph handle.
 */
typedef struct ZfHypergraph ZfHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static name of a status code, e.g. `"NotAClutter"`; `"Unknown"` for
 * codes outside the enum.
 */
const char *zf_status_name(uint32_t status);

/**
 * Message for the most recent failing call on this thread; empty after a
 * success. Valid until the next call into the library on the same thread.
 */
const char *zf_last_error_message(void);

/**
 * Builds a hypergraph on `{1..n}` from `count` edge masks.
 *
 * # Safety
 * `edges` must point to `count` readable values (may be null when `count`
 * is 0); `out` must be writable.
 */
enum ZfStatus zf_hypergraph_new(uint32_t n,
                                const uint64_t *edges,
                                size_t count,
                                struct ZfHypergraph **out);

/**
 * Parses the text or JSON edge-list format.
 *
 * # Safety
 * `input` must be a nul-terminated string; `out` must be writable.
 */
enum ZfStatus zf_hypergraph_parse(const char *input, struct ZfHypergraph **out);

/**
 * Builds a named construction (`"complete"`, `"r2-forcing"`, ...).
 *
 * # Safety
 * `name` must be a nul-terminated string; `out` must be writable.
 */
enum ZfStatus zf_construct(const char *name, uint32_t n, uint32_t k, struct ZfHypergraph **out);

/**
 * # Safety
 * `h` must be null or a handle from this library not yet freed.
 */
void zf_hypergraph_free(struct ZfHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle.
 */
uint32_t zf_hypergraph_vertex_count(const struct ZfHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle.
 */
size_t zf_hypergraph_edge_count(const struct ZfHypergraph *h);

/**
 * Edge `index` in canonical order.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_hypergraph_edge(const struct ZfHypergraph *h, size_t index, uint64_t *out);

/**
 * Closure of `black` under `rule`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_closure(const struct ZfHypergraph *h,
                         uint32_t rule,
                         uint64_t black,
                         uint64_t *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_is_forcing(const struct ZfHypergraph *h, uint32_t rule, uint64_t set, bool *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_is_immune(const struct ZfHypergraph *h, uint32_t rule, uint64_t set, bool *out);

/**
 * Immunity decided from neighbourhoods alone.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_is_immune_nbhd(const struct ZfHypergraph *h,
                                uint32_t rule,
                                uint64_t set,
                                bool *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_forcing_number(const struct ZfHypergraph *h, uint32_t rule, uint32_t *out);

/**
 * Minimal forcing sets. `jobs` of 0 or 1 scans sequentially.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_minimal_forcing_family(const struct ZfHypergraph *h,
                                        uint32_t rule,
                                        uint32_t jobs,
                                        struct ZfClutter **out);

/**
 * Minimal immune sets.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_minimal_immune_family(const struct ZfHypergraph *h,
                                       uint32_t rule,
                                       uint32_t jobs,
                                       struct ZfClutter **out);

/**
 * Builds a clutter on `{1..n}` from `count` member masks.
 *
 * # Safety
 * `members` must point to `count` readable values (may be null when
 * `count` is 0); `out` must be writable.
 */
enum ZfStatus zf_clutter_new(uint32_t n,
                             const uint64_t *members,
                             size_t count,
                             struct ZfClutter **out);

/**
 * # Safety
 * `c` must be null or a handle from this library not yet freed.
 */
void zf_clutter_free(struct ZfClutter *c);

/**
 * # Safety
 * `c` must be a live handle.
 */
uint32_t zf_clutter_vertex_count(const struct ZfClutter *c);

/**
 * # Safety
 * `c` must be a live handle.
 */
size_t zf_clutter_len(const struct ZfClutter *c);

/**
 * Member `index` in canonical order.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_clutter_member(const struct ZfClutter *c, size_t index, uint64_t *out);

/**
 * Minimal transversal (blocker) of `c`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum ZfStatus zf_clutter_transversal(const struct ZfClutter *c, struct ZfClutter **out);

/**
 * Whether two clutters hold the same members on the same ground set.
 *
 * # Safety
 * `a` and `b` must be live handles.
 */
bool zf_clutter_equal(const struct ZfClutter *a, const struct ZfClutter *b);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZEROFORCE_H */
