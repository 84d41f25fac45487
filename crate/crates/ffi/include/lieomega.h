#ifndef LIEOMEGA_H
#define LIEOMEGA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of every call.
 */
typedef enum LoStatus {
  LO_STATUS_OK = 0,
  LO_STATUS_NULL_POINTER = 1,
  LO_STATUS_INVALID_UTF8 = 2,
  LO_STATUS_INVALID_ARGUMENT = 3,
  LO_STATUS_PARSE = 4,
  LO_STATUS_ENGINE = 5,
  LO_STATUS_PANIC = 6,
} LoStatus;

/*
 Opaque handle.
 */
typedef struct LoSession LoSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Creates a session. `gens` is a comma-separated list, greatest first;
 `ops` lists `name:arity` pairs the same way (empty for none); `lambda`
 is `"symbolic"` or a rational such as `"2/3"`.

 # Safety
 String arguments must be null or valid NUL-terminated strings; `out`
 must be null or writable.
 */
enum LoStatus lo_session_new(const char *gens,
                             const char *ops,
                             const char *lambda,
                             struct LoSession **out);

/*
 Releases a session; null is ignored.

 # Safety
 `s` must be null or come from `lo_session_new`, and not be used again.
 */
void lo_session_free(struct LoSession *s);

/*
 Replaces the rules by a preset family (`rb`, `mrb`, `nij` or
 `perturbed`) truncated at `max_deg`.

 # Safety
 `s` must be a live session and `name` a valid string or null.
 */
enum LoStatus lo_session_load_preset(struct LoSession *s, const char *name, uintptr_t max_deg);

/*
 Parses `poly`, makes it monic and appends it; writes the new rule id.

 # Safety
 `s` must be a live session; `poly` a valid string; `out_id` null or
 writable.
 */
enum LoStatus lo_session_add_rule(struct LoSession *s, const char *poly, uintptr_t *out_id);

/*
 Number of rules in the session, 0 for a null session.

 # Safety
 `s` must be null or a live session.
 */
uintptr_t lo_session_rule_count(const struct LoSession *s);

/*
 Standard bracketing of an ALSW word, as text.

 # Safety
 `s` must be a live session, `word` a valid string and `out` writable.
 */
enum LoStatus lo_bracket(const struct LoSession *s, const char *word, char **out);

/*
 Normal form of `poly` modulo the session's rules, as text.

 # Safety
 `s` must be a live session, `poly` a valid string and `out` writable.
 */
enum LoStatus lo_normalize(const struct LoSession *s, const char *poly, char **out);

/*
 Checks every Lie composition up to `max_deg`; writes the number of
 compositions and how many are nontrivial.

 # Safety
 `s` must be a live session; output pointers writable.
 */
enum LoStatus lo_check_gsb(const struct LoSession *s,
                           uintptr_t max_deg,
                           uintptr_t *out_total,
                           uintptr_t *out_nontrivial);

/*
 As `lo_check_gsb`, on the associative expansions.

 # Safety
 `s` must be a live session; output pointers writable.
 */
enum LoStatus lo_assoc_check(const struct LoSession *s,
                             uintptr_t max_deg,
                             uintptr_t *out_total,
                             uintptr_t *out_nontrivial);

/*
 Completes the rule set up to `max_deg` in place; writes how many rules
 were added.

 # Safety
 `s` must be a live session; `out_added` null or writable.
 */
enum LoStatus lo_complete(struct LoSession *s, uintptr_t max_deg, uintptr_t *out_added);

/*
 Writes `|Irr|` for degrees `1..=max_deg` into `out[0..max_deg]`.

 # Safety
 `s` must be a live session; `out` must hold `len` elements.
 */
enum LoStatus lo_irr_counts(const struct LoSession *s,
                            uintptr_t max_deg,
                            uintptr_t *out,
                            uintptr_t len);

/*
 Quotient dimensions from the linear-algebra oracle, laid out as in
 `lo_irr_counts`.

 # Safety
 `s` must be a live session; `out` must hold `len` elements.
 */
enum LoStatus lo_dim_oracle(const struct LoSession *s,
                            uintptr_t max_deg,
                            uintptr_t *out,
                            uintptr_t len);

/*
 Message for the last failed call on this thread, or null after a
 success. Valid until the next call on the same thread.
 */
const char *lo_last_error(void);

/*
 Releases a string returned by the library; null is ignored.

 # Safety
 `p` must be null or come from this library, and not be used again.
 */
void lo_string_free(char *p);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEOMEGA_H */
