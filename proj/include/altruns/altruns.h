/* C interface to the alternating-runs library.
 *
 * Every command writes its rendered output into the session; read it with
 * altruns_session_output() until the next call on the same session. On a
 * nonzero status, altruns_session_error() holds a message. A session must
 * not be used from two threads at once; distinct sessions are independent.
 */
#ifndef ALTRUNS_ALTRUNS_H
#define ALTRUNS_ALTRUNS_H

#include <stdint.h>

#if defined(_WIN32)
#define ALTRUNS_API __declspec(dllexport)
#else
#define ALTRUNS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum altruns_status {
  ALTRUNS_OK = 0,
  ALTRUNS_CHECK_FAILED = 1,     /* output complete, but an invariant failed */
  ALTRUNS_INVALID_ARGUMENT = 2, /* out-of-range or malformed input */
  ALTRUNS_BUDGET_EXCEEDED = 3,  /* enumeration larger than the budget */
  ALTRUNS_INTERNAL_ERROR = 4
} altruns_status;

typedef enum altruns_format {
  ALTRUNS_FORMAT_TEXT = 0,
  ALTRUNS_FORMAT_JSON = 1,
  ALTRUNS_FORMAT_CSV = 2
} altruns_format;

typedef enum altruns_method {
  ALTRUNS_METHOD_BRUTE = 0,
  ALTRUNS_METHOD_RECURRENCE = 1,
  ALTRUNS_METHOD_GENFUN = 2,
  ALTRUNS_METHOD_CLOSED_FORM = 3,
  ALTRUNS_METHOD_CENSUS = 4,
  ALTRUNS_METHOD_ALL = 5
} altruns_method;

typedef enum altruns_suite {
  ALTRUNS_SUITE_ALL = 0,
  ALTRUNS_SUITE_TRIANGLE = 1,
  ALTRUNS_SUITE_GENFUN = 2,
  ALTRUNS_SUITE_CLOSED_FORM = 3,
  ALTRUNS_SUITE_BIJECTION = 4,
  ALTRUNS_SUITE_POLYNOMIAL = 5
} altruns_suite;

/* Default census budget: 2^24 tuples. */
#define ALTRUNS_DEFAULT_BUDGET ((uint64_t)1 << 24)

typedef struct altruns_session altruns_session;
typedef struct altruns_triangle altruns_triangle;

ALTRUNS_API const char* altruns_version(void);
ALTRUNS_API const char* altruns_status_string(altruns_status status);

/* Name lookups for the CLI; "text", "closed-form", "all", ... */
ALTRUNS_API altruns_status altruns_parse_format(const char* name, altruns_format* out);
ALTRUNS_API altruns_status altruns_parse_method(const char* name, altruns_method* out);
ALTRUNS_API altruns_status altruns_parse_suite(const char* name, altruns_suite* out);

/* NULL on allocation failure. */
ALTRUNS_API altruns_session* altruns_session_create(void);
ALTRUNS_API void altruns_session_destroy(altruns_session* session);
/* Never NULL for a live session; "" before the first command. */
ALTRUNS_API const char* altruns_session_output(const altruns_session* session);
ALTRUNS_API const char* altruns_session_error(const altruns_session* session);

ALTRUNS_API altruns_status altruns_table(altruns_session* session, int n_max,
                                         altruns_format format);
ALTRUNS_API altruns_status altruns_count(altruns_session* session, int n, int s,
                                         altruns_method method, uint64_t budget,
                                         altruns_format format);
ALTRUNS_API altruns_status altruns_formula(altruns_session* session, int s,
                                           altruns_format format);
ALTRUNS_API altruns_status altruns_gf(altruns_session* session, int s, altruns_format format);
ALTRUNS_API altruns_status altruns_pfd(altruns_session* session, int s, altruns_format format);
/* Every cell n_lo <= n <= n_hi, s_lo <= s <= s_hi. */
ALTRUNS_API altruns_status altruns_census(altruns_session* session, int n_lo, int n_hi,
                                          int s_lo, int s_hi, uint64_t budget,
                                          altruns_format format);
/* T-tuple with num_parts parts over [n]; part_of_value[v-1] in 1..num_parts
 * names the part holding v. */
ALTRUNS_API altruns_status altruns_trace(altruns_session* session, int n, int num_parts,
                                         const int* part_of_value, altruns_format format);
ALTRUNS_API altruns_status altruns_verify(altruns_session* session, altruns_suite suite,
                                          altruns_format format);

/* Triangle P(n, s) for 2 <= n <= n_max <= 200. */
ALTRUNS_API altruns_status altruns_triangle_create(altruns_session* session, int n_max,
                                                   altruns_triangle** out);
ALTRUNS_API void altruns_triangle_destroy(altruns_triangle* triangle);
ALTRUNS_API int altruns_triangle_n_max(const altruns_triangle* triangle);
/* Decimal string, "0" for s outside 1..n-1; NULL if n is outside 2..n_max.
 * Valid for the lifetime of the handle. */
ALTRUNS_API const char* altruns_triangle_value(const altruns_triangle* triangle, int n, int s);

#ifdef __cplusplus
}
#endif

#endif /* ALTRUNS_ALTRUNS_H */
