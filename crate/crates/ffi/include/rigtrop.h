#ifndef RIGTROP_H
#define RIGTROP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum RtStatus {
  RT_STATUS_OK = 0,
  RT_STATUS_NULL_POINTER = 1,
  RT_STATUS_INVALID_UTF8 = 2,
  RT_STATUS_PARSE_ERROR = 3,
  RT_STATUS_INVALID_INPUT = 4,
  RT_STATUS_NON_CONVERGENCE = 5,
  RT_STATUS_BUFFER_TOO_SMALL = 6,
  RT_STATUS_INTERNAL = 7,
  RT_STATUS_PANIC = 8,
} RtStatus;

// A tensor product of one-row crystal elements.
typedef struct RtPath RtPath;

// A rigged configuration.
typedef struct RtRiggedConfig RtRiggedConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null if none.
// The pointer stays valid until the next failing call on the same thread.
const char *rt_last_error_message(void);

// Frees a string returned by this library.
//
// # Safety
// `s` must be null or a string returned by this library and not yet freed.
void rt_string_free(char *s);

// Parses a path such as `"n=3; 12,3,22"` into a new handle.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum RtStatus rt_path_parse(const char *text, struct RtPath **out);

// # Safety
// `path` must be null or a handle from this library not yet freed.
void rt_path_free(struct RtPath *path);

// Writes the path in the same text form [`rt_path_parse`] reads.
//
// # Safety
// `path` must be a live handle; `out` must be writable.
enum RtStatus rt_path_to_string(const struct RtPath *path, char **out);

// Number of tensor factors.
//
// # Safety
// `path` must be null or a live handle.
size_t rt_path_len(const struct RtPath *path);

// Number of letters other than 1.
//
// # Safety
// `path` must be null or a live handle.
size_t rt_path_ball_count(const struct RtPath *path);

// One carrier sweep `T^{r,s}`; the result is a new handle.
//
// # Safety
// `path` must be a live handle; `out` must be writable.
enum RtStatus rt_path_evolve(const struct RtPath *path, size_t r, size_t s, struct RtPath **out);

// The energy `E^{r,s}` collected by one carrier sweep.
//
// # Safety
// `path` must be a live handle; `out` must be writable.
enum RtStatus rt_path_energy(const struct RtPath *path, size_t r, size_t s, size_t *out);

// Shape `ν^{(1)}` from the tropical formula. Writes up to `cap` parts to
// `buf` and the number of parts to `out_len`; returns `BufferTooSmall`
// (with `out_len` set) when `cap` is short.
//
// # Safety
// `path` must be a live handle; `buf` must hold `cap` values; `out_len`
// must be writable.
enum RtStatus rt_first_shape(const struct RtPath *path, size_t *buf, size_t cap, size_t *out_len);

// Shape `ν^{(s)}` from the cylindric loop Schur conjecture; buffer rules
// as in [`rt_first_shape`].
//
// # Safety
// Same as [`rt_first_shape`].
enum RtStatus rt_conjectured_shape(const struct RtPath *path,
                                   size_t s,
                                   size_t *buf,
                                   size_t cap,
                                   size_t *out_len);

// Runs the bijection `Φ`.
//
// # Safety
// `path` must be a live handle; `out` must be writable.
enum RtStatus rt_phi(const struct RtPath *path, struct RtRiggedConfig **out);

// Runs `Φ⁻¹`, cutting the result into factors of widths `order[0..len]`.
//
// # Safety
// `rc` must be a live handle; `order` must hold `len` values; `out` must
// be writable.
enum RtStatus rt_phi_inverse(const struct RtRiggedConfig *rc,
                             const size_t *order,
                             size_t len,
                             struct RtPath **out);

// Reads a rigged configuration from JSON.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum RtStatus rt_rc_from_json(const char *json, struct RtRiggedConfig **out);

// # Safety
// `rc` must be a live handle; `out` must be writable.
enum RtStatus rt_rc_to_json(const struct RtRiggedConfig *rc, char **out);

// # Safety
// `rc` must be null or a handle from this library not yet freed.
void rt_rc_free(struct RtRiggedConfig *rc);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIGTROP_H */
