#ifndef SPCLOSURE_H
#define SPCLOSURE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ClStatus {
  CL_STATUS_OK = 0,
  CL_STATUS_NULL_POINTER = 1,
  CL_STATUS_INVALID_UTF8 = 2,
  CL_STATUS_PARSE = 3,
  CL_STATUS_INVALID_ARGUMENT = 4,
  CL_STATUS_DIMENSION_MISMATCH = 5,
  CL_STATUS_CHARACTERISTIC_MISMATCH = 6,
  CL_STATUS_UNSUPPORTED = 7,
  CL_STATUS_OVERFLOW = 8,
  CL_STATUS_NO_WITNESS = 9,
  CL_STATUS_PANIC = 10,
} ClStatus;

/**
 * A monomial ideal together with its variable names.
 */
typedef struct ClMonomialIdeal ClMonomialIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *cl_last_error_message(void);

/**
 * Parses `ideal` (e.g. "x^2*y, y^3") over the comma-separated `vars`.
 *
 * # Safety
 * `vars` and `ideal` are NUL-terminated strings; `out` is a valid pointer.
 */
enum ClStatus cl_monomial_ideal_parse(const char *vars,
                                      const char *ideal,
                                      struct ClMonomialIdeal **out);

/**
 * # Safety
 * `handle` is NULL or came from this library and has not been freed.
 */
void cl_monomial_ideal_free(struct ClMonomialIdeal *handle);

/**
 * Number of variables, or 0 for a NULL handle.
 *
 * # Safety
 * `handle` is NULL or a live handle.
 */
size_t cl_monomial_ideal_num_vars(const struct ClMonomialIdeal *handle);

/**
 * Number of minimal generators, or 0 for a NULL handle.
 *
 * # Safety
 * `handle` is NULL or a live handle.
 */
size_t cl_monomial_ideal_num_generators(const struct ClMonomialIdeal *handle);

/**
 * Writes the generators in text form, e.g. "x^2, x*y, y^2". Release with
 * [`cl_string_free`].
 *
 * # Safety
 * `handle` is a live handle; `out` is a valid pointer.
 */
enum ClStatus cl_monomial_ideal_to_string(const struct ClMonomialIdeal *handle, char **out);

/**
 * # Safety
 * `s` is NULL or a string returned by this library and not yet freed.
 */
void cl_string_free(char *s);

/**
 * The integral closure as a new handle.
 *
 * # Safety
 * `handle` is a live handle; `out` is a valid pointer.
 */
enum ClStatus cl_integral_closure(const struct ClMonomialIdeal *handle,
                                  struct ClMonomialIdeal **out);

/**
 * The special part of the integral closure as a new handle.
 *
 * # Safety
 * `handle` is a live handle; `out` is a valid pointer.
 */
enum ClStatus cl_special_integral_closure(const struct ClMonomialIdeal *handle,
                                          struct ClMonomialIdeal **out);

/**
 * Whether x^α lies in the integral closure (or, with `special`, in its
 * special part). `exponents` holds one entry per variable.
 *
 * # Safety
 * `handle` is a live handle; `exponents` points to `len` readable values;
 * `out` is a valid pointer.
 */
enum ClStatus cl_contains_integral(const struct ClMonomialIdeal *handle,
                                   const uint32_t *exponents,
                                   size_t len,
                                   bool special,
                                   bool *out);

/**
 * Whether the integral closure equals I plus its special part.
 *
 * # Safety
 * `handle` is a live handle; `out` is a valid pointer.
 */
enum ClStatus cl_decomposition_holds(const struct ClMonomialIdeal *handle, bool *out);

/**
 * Bounded Frobenius-closure membership of `element` in the ideal generated
 * by the comma-separated `ideal` inside the ring `ring`, e.g.
 * "F2[x,y,z]/(x^3+y^3+z^3)". With `special`, tests the special part.
 * Writes the smallest e ≤ `e_max` found, or -1 when the search failed.
 *
 * # Safety
 * The strings are NUL-terminated; `out_e` is a valid pointer.
 */
enum ClStatus cl_frobenius_member(const char *ring,
                                  const char *ideal,
                                  const char *element,
                                  uint32_t e_max,
                                  bool special,
                                  int64_t *out_e);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPCLOSURE_H */
