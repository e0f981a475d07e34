#ifndef CTSYNTH_H
#define CTSYNTH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Descend with `T^{-k}` instead of `T^{k}`.
 */
#define CTSYNTH_NEGATIVE_POWERS 1

/**
 * Write `T³` as `P·T` instead of `Z·T†`.
 */
#define CTSYNTH_PREFER_P 2

typedef enum CtsynthStatus {
  CTSYNTH_STATUS_OK = 0,
  CTSYNTH_STATUS_NULL_ARGUMENT = 1,
  CTSYNTH_STATUS_INVALID_UTF8 = 2,
  CTSYNTH_STATUS_PARSE = 3,
  CTSYNTH_STATUS_UNITARITY = 4,
  CTSYNTH_STATUS_DIVISIBILITY = 5,
  CTSYNTH_STATUS_TABLE_FORMAT = 6,
  CTSYNTH_STATUS_IO = 7,
  CTSYNTH_STATUS_TABLE_MISS = 8,
  CTSYNTH_STATUS_CERTIFICATE = 9,
  CTSYNTH_STATUS_INTERNAL = 10,
  CTSYNTH_STATUS_PANIC = 11,
} CtsynthStatus;

typedef struct CtsynthCircuit CtsynthCircuit;

typedef struct CtsynthTable CtsynthTable;

typedef struct CtsynthUnitary CtsynthUnitary;

typedef struct CtsynthCounts {
  size_t n_g;
  size_t n_t;
  size_t n_h;
  size_t n_p;
  size_t n_pl;
} CtsynthCounts;

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on this thread.
 */
const char *ctsynth_last_error(void);

/**
 * # Safety
 * `s` is null or a string returned by this library, not yet freed.
 */
void ctsynth_string_free(char *s);

/**
 * Builds the lookup table in memory.
 *
 * # Safety
 * `out` must be writable.
 */
enum CtsynthStatus ctsynth_table_build(struct CtsynthTable **out);

/**
 * Loads the table cached at `path`, building and writing it if missing.
 *
 * # Safety
 * `path` is a NUL-terminated string; `out` must be writable.
 */
enum CtsynthStatus ctsynth_table_load_or_build(const char *path, struct CtsynthTable **out);

/**
 * # Safety
 * `t` is null or a table handle not yet freed.
 */
void ctsynth_table_free(struct CtsynthTable *t);

/**
 * Parses and validates a matrix in the JSON form
 * `{"z00": {"c": [a, b, c, d], "k": k}, ...}`.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` must be writable.
 */
enum CtsynthStatus ctsynth_unitary_from_json(const char *text, struct CtsynthUnitary **out);

/**
 * Evaluates circuit text such as `"HTHT"` (gates in application order).
 *
 * # Safety
 * `word` is a NUL-terminated string; `out` must be writable.
 */
enum CtsynthStatus ctsynth_unitary_from_word(const char *word, struct CtsynthUnitary **out);

/**
 * # Safety
 * `u` is a live unitary handle; `out` must be writable. The string is
 * released with [`ctsynth_string_free`].
 */
enum CtsynthStatus ctsynth_unitary_to_json(const struct CtsynthUnitary *u, char **out);

/**
 * `sde(|z|²)` of the matrix entries, 0 for monomial matrices.
 *
 * # Safety
 * `u` is a live unitary handle; `out` must be writable.
 */
enum CtsynthStatus ctsynth_unitary_sde(const struct CtsynthUnitary *u, uint64_t *out);

/**
 * # Safety
 * `u` is null or a unitary handle not yet freed.
 */
void ctsynth_unitary_free(struct CtsynthUnitary *u);

/**
 * Synthesizes `u`. On success `*out` evaluates to `ω^{*phase} · u`.
 *
 * # Safety
 * `table` and `u` are live handles; `out` and `phase` must be writable.
 */
enum CtsynthStatus ctsynth_synthesize(const struct CtsynthTable *table,
                                      const struct CtsynthUnitary *u,
                                      uint32_t flags,
                                      struct CtsynthCircuit **out,
                                      uint8_t *phase);

/**
 * Finds a circuit taking `|0⟩` exactly to the state given as
 * `{"z": scalar, "w": scalar}`.
 *
 * # Safety
 * `table` is a live handle, `state` a NUL-terminated string, `out` writable.
 */
enum CtsynthStatus ctsynth_prepare(const struct CtsynthTable *table,
                                   const char *state,
                                   uint32_t flags,
                                   struct CtsynthCircuit **out);

/**
 * Circuit text in application order.
 *
 * # Safety
 * `c` is a live circuit handle; `out` must be writable.
 */
enum CtsynthStatus ctsynth_circuit_text(const struct CtsynthCircuit *c, char **out);

/**
 * # Safety
 * `c` is a live circuit handle; `out` must be writable.
 */
enum CtsynthStatus ctsynth_circuit_counts(const struct CtsynthCircuit *c,
                                          struct CtsynthCounts *out);

/**
 * # Safety
 * `c` is null or a circuit handle not yet freed.
 */
void ctsynth_circuit_free(struct CtsynthCircuit *c);

/**
 * Runs the exhaustive residue check; `*holds` receives the verdict.
 *
 * # Safety
 * `holds` must be writable.
 */
enum CtsynthStatus ctsynth_verify_lemma(bool *holds);

#endif  /* CTSYNTH_H */
