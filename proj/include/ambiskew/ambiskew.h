#ifndef AMBISKEW_H
#define AMBISKEW_H

/* C interface to the ambiskew library. Results are JSON documents returned
 * through `char** out` and released with ambi_string_free. On a non-OK
 * status *out is left NULL and ambi_last_error() describes the failure
 * (per thread, valid until the next call). */

#if defined(__GNUC__)
#define AMBI_API __attribute__((visibility("default")))
#else
#define AMBI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    AMBI_OK = 0,
    AMBI_REFUSED = 1,          /* outside the hypotheses of the computation */
    AMBI_PARSE_ERROR = 2,      /* malformed expression or document */
    AMBI_INVALID_ARGUMENT = 3, /* well-formed input violating an invariant */
    AMBI_INTERNAL = 4
} ambi_status;

typedef struct ambi_algebra ambi_algebra;

AMBI_API const char* ambi_version(void);
AMBI_API const char* ambi_last_error(void);
AMBI_API void ambi_string_free(char* s);

/* Spec document text (JSON). */
AMBI_API ambi_status ambi_algebra_from_json(const char* json, ambi_algebra** out);
/* params: NULL or "key=value,..." with keys q_order, alpha, M, p, r, s, t,
 * p2, r2, s2, t2, rho, lambda. */
AMBI_API ambi_status ambi_algebra_from_preset(const char* id, const char* params, ambi_algebra** out);
AMBI_API void ambi_algebra_free(ambi_algebra* a);
AMBI_API ambi_status ambi_algebra_to_json(const ambi_algebra* a, char** out);

AMBI_API ambi_status ambi_preset_list(char** out);

AMBI_API ambi_status ambi_check_hopf(const ambi_algebra* a, char** out);

/* Weights are JSON objects such as {"K":"q^3"}; bound <= 0 means the default. */
AMBI_API ambi_status ambi_classify(const ambi_algebra* a, const char* weight, long bound, char** out);
AMBI_API ambi_status ambi_dim(const ambi_algebra* a, const char* weight, long bound, char** out);
AMBI_API ambi_status ambi_simple(const ambi_algebra* a, const char* weight, long bound, int with_matrices, char** out);
AMBI_API ambi_status ambi_tensor(const ambi_algebra* a, const char* left, const char* right, long bound, char** out);
AMBI_API ambi_status ambi_casimir(const ambi_algebra* a, const char* base, long j, char** out);
/* module: WeightModule document. */
AMBI_API ambi_status ambi_decompose(const ambi_algebra* a, const char* module, long bound, char** out);

#ifdef __cplusplus
}
#endif

#endif
