/* C interface to the frobq library. All text is UTF-8. Strings returned
 * through char** are owned by the caller and released with frobq_string_free.
 * A context is not safe for concurrent use; separate contexts are. */
#ifndef FROBQ_FROBQ_H
#define FROBQ_FROBQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FROBQ_API __declspec(dllexport)
#else
#define FROBQ_API __attribute__((visibility("default")))
#endif

typedef enum frobq_status {
  FROBQ_OK = 0,
  FROBQ_ERR_ARGUMENT = 1,  /* null pointer, unknown key, out-of-range value */
  FROBQ_ERR_PARSE = 2,     /* malformed text input */
  FROBQ_ERR_DOMAIN = 3,    /* mathematical precondition failed */
  FROBQ_ERR_RESOURCE = 4,  /* a configured cap was exceeded */
  FROBQ_ERR_INVARIANT = 5, /* internal consistency check failed (a bug) */
  FROBQ_ERR_INTERNAL = 6   /* anything else, including allocation failure */
} frobq_status;

typedef struct frobq_ctx frobq_ctx;

FROBQ_API const char* frobq_version(void);
FROBQ_API const char* frobq_status_name(frobq_status s);

/* field: "p=2,m=2" with optional ",mod=t^2+t+1". S: comma-separated monic
 * irreducibles of F_p[z], e.g. "z, z+1"; NULL or "" for R = F[z]. */
FROBQ_API frobq_status frobq_ctx_new(const char* field, const char* S, frobq_ctx** out);
FROBQ_API void frobq_ctx_free(frobq_ctx* ctx);
/* Message of the last failed call on ctx, "" after a success. */
FROBQ_API const char* frobq_last_error(const frobq_ctx* ctx);
/* Keys: "height_cap" (eval_bounded default), "max_branch" (assignments per
 * quantifier block), "preimage_candidates", "preimage_tuples". */
FROBQ_API frobq_status frobq_ctx_set_cap(frobq_ctx* ctx, const char* key, uint64_t value);
FROBQ_API void frobq_string_free(char* s);

/* The calls below write a JSON document to *out. Additive polynomials use
 * the syntax "poly{z}*x1^2 + x1 + a1" (names starting with 'a' are F-sorted). */
FROBQ_API frobq_status frobq_normalize(frobq_ctx* ctx, const char* f, char** out);
/* family: rational functions separated by ';'. */
FROBQ_API frobq_status frobq_wronskian(frobq_ctx* ctx, const char* family, unsigned s, char** out);
FROBQ_API frobq_status frobq_hasse(frobq_ctx* ctx, const char* x, unsigned eps, char** out);
FROBQ_API frobq_status frobq_eord(frobq_ctx* ctx, const char* f, char** out);
FROBQ_API frobq_status frobq_reduce(frobq_ctx* ctx, const char* f, const char* u, char** out);
FROBQ_API frobq_status frobq_hbound(frobq_ctx* ctx, const char* f, int64_t ell, char** out);
FROBQ_API frobq_status frobq_preimage(frobq_ctx* ctx, const char* f, const char* y, char** out);
/* Universal formula equivalent to phi (model-complete transform). */
FROBQ_API frobq_status frobq_transform(frobq_ctx* ctx, const char* phi, char** out);
/* L_p sentence over F equivalent to the sentence phi over R. */
FROBQ_API frobq_status frobq_to_sigma(frobq_ctx* ctx, const char* phi, char** out);

/* Truth of an L_p sentence over F; variables default to F. */
FROBQ_API frobq_status frobq_eval_sigma(frobq_ctx* ctx, const char* sigma, int* truth);
/* Bounded semantics with R-quantifiers over heights <= cap (0 selects the
 * context's height_cap). assignment: "u = 1/z; b = 1", may be NULL. */
FROBQ_API frobq_status frobq_eval_bounded(frobq_ctx* ctx, const char* phi, const char* assignment, unsigned cap,
                                          int* truth);

/* Runs the acceptance suites (quick != 0 for reduced sizes). Criteria are
 * selected by the bit mask (bit i-1 for criterion i; 0 selects all). *passed
 * is 1 when every selected suite passed. */
FROBQ_API frobq_status frobq_selftest(frobq_ctx* ctx, int quick, uint64_t seed, uint32_t mask, int* passed,
                                      char** out);

#ifdef __cplusplus
}
#endif

#endif /* FROBQ_FROBQ_H */
