#ifndef CDTOOL_H
#define CDTOOL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum cd_status {
  CD_STATUS_OK = 0,
  CD_STATUS_NULL_POINTER = 1,
  CD_STATUS_INVALID_ARGUMENT = 2,
  CD_STATUS_PARSE = 3,
  CD_STATUS_CAP_EXCEEDED = 4,
  CD_STATUS_NOT_FOUND = 5,
  CD_STATUS_IO = 6,
  CD_STATUS_PRECONDITION = 7,
  CD_STATUS_PANIC = 8,
} cd_status;

/*
 A parsed catalog of groups.
 */
typedef struct cd_catalog cd_catalog;

/*
 A finite permutation group.
 */
typedef struct cd_group cd_group;

/*
 The Chermak-Delgado lattice of a group, members sorted by order.
 */
typedef struct cd_lattice cd_lattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. The pointer is
 valid until the next failing call on the same thread.
 */
const char *cd_last_error(void);

/*
 # Safety
 `s` must be null or a string returned by this library, not yet freed.
 */
void cd_string_free(char *s);

/*
 Builds a named group such as `symmetric:4`, `dihedral:5` or `elementary:2^3`.

 # Safety
 `name` must be a nul-terminated string; `out` must be writable.
 */
enum cd_status cd_group_builtin(const char *name, struct cd_group **out);

/*
 Parses the first record of `text`, in catalog format.

 # Safety
 `text` must be a nul-terminated string; `out` must be writable.
 */
enum cd_status cd_group_parse(const char *text, struct cd_group **out);

/*
 The affine group `[GF(p^n)] T H` with `|T| = q`, `|H| = p^r`.

 # Safety
 `out` must be writable.
 */
enum cd_status cd_group_construct(uint64_t p,
                                  uint64_t q,
                                  uint32_t n,
                                  uint32_t r,
                                  struct cd_group **out);

/*
 # Safety
 `g` must be null or a live handle; it is invalid afterwards.
 */
void cd_group_free(struct cd_group *g);

/*
 Number of elements; 0 for a null handle.

 # Safety
 `g` must be null or a live handle.
 */
size_t cd_group_order(const struct cd_group *g);

/*
 # Safety
 `g` must be null or a live handle.
 */
size_t cd_group_degree(const struct cd_group *g);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum cd_status cd_group_is_cd_simple(const struct cd_group *g, bool *out);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum cd_status cd_group_has_property_a(const struct cd_group *g, bool *out);

/*
 The group as a catalog record with the given id.

 # Safety
 `g` must be a live handle; `out` must be writable. Free the result with
 `cd_string_free`.
 */
enum cd_status cd_group_format(const struct cd_group *g, size_t index, char **out);

/*
 # Safety
 `g` must be a live handle; `out` must be writable.
 */
enum cd_status cd_lattice_compute(const struct cd_group *g, struct cd_lattice **out);

/*
 # Safety
 `l` must be null or a live handle; it is invalid afterwards.
 */
void cd_lattice_free(struct cd_lattice *l);

/*
 Largest value of `|H| |C_G(H)|`; 0 for a null handle.

 # Safety
 `l` must be null or a live handle.
 */
uint64_t cd_lattice_max_measure(const struct cd_lattice *l);

/*
 # Safety
 `l` must be null or a live handle.
 */
size_t cd_lattice_len(const struct cd_lattice *l);

/*
 Order of member `i`.

 # Safety
 `l` must be a live handle; `out` must be writable.
 */
enum cd_status cd_lattice_member_order(const struct cd_lattice *l, size_t i, size_t *out);

/*
 Index of the centralizer of member `i` within the lattice.

 # Safety
 `l` must be a live handle; `out` must be writable.
 */
enum cd_status cd_lattice_member_dual(const struct cd_lattice *l, size_t i, size_t *out);

/*
 The bundled catalog of all groups of order 1 to 50.

 # Safety
 `out` must be writable.
 */
enum cd_status cd_catalog_bundled(struct cd_catalog **out);

/*
 # Safety
 `text` must be a nul-terminated string; `out` must be writable.
 */
enum cd_status cd_catalog_parse(const char *text, struct cd_catalog **out);

/*
 # Safety
 `c` must be null or a live handle; it is invalid afterwards.
 */
void cd_catalog_free(struct cd_catalog *c);

/*
 # Safety
 `c` must be null or a live handle.
 */
size_t cd_catalog_len(const struct cd_catalog *c);

/*
 A new group handle for entry `order.index`, independent of the catalog.

 # Safety
 `c` must be a live handle; `out` must be writable.
 */
enum cd_status cd_catalog_group(const struct cd_catalog *c,
                                size_t order,
                                size_t index,
                                struct cd_group **out);

/*
 JSON classification report for catalog orders `lo..=hi`.

 # Safety
 `c` must be a live handle; `out` must be writable. Free the result with
 `cd_string_free`.
 */
enum cd_status cd_classify_json(const struct cd_catalog *c, size_t lo, size_t hi, char **out);

/*
 Writes up to `cap` primes `p < limit` with `(p^p - 1)/(p - 1)` prime into
 `buf` and their total count into `count`.

 # Safety
 `buf` must have room for `cap` values (it may be null when `cap` is 0);
 `count` must be writable.
 */
enum cd_status cd_wagstaff_primes(uint64_t limit, uint64_t *buf, size_t cap, size_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CDTOOL_H */
