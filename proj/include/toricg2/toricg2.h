#ifndef TORICG2_TORICG2_H
#define TORICG2_TORICG2_H

/**
 * @file toricg2.h
 * @brief C interface to the toricg2 shared library.
 *
 * The library analyzes complete simplicial fans: validation, wall relations,
 * Fano and singularity tests, and the gamma2 positivity classification.
 *
 * Conventions:
 *  - Fans are opaque handles created by tg2_fan_parse_json or
 *    tg2_fan_from_catalog and released with tg2_fan_free.
 *  - Every analysis returns a schema-versioned JSON document in a
 *    heap-allocated NUL-terminated string owned by the caller; release it
 *    with tg2_string_free.
 *  - On failure the functions return a nonzero status and, when an
 *    out_error parameter is given, store a human-readable message there
 *    (also released with tg2_string_free).  Out-parameters are set to NULL
 *    on entry, so they are safe to free unconditionally.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/** Opaque fan handle. */
typedef struct tg2_fan tg2_fan;

/** Status codes returned by every fallible entry point. */
typedef enum tg2_status {
    TG2_OK = 0,
    TG2_ERR_ARGUMENT = 1,    /**< bad parameter (null pointer, bad index, ...) */
    TG2_ERR_PARSE = 2,       /**< malformed fan file */
    TG2_ERR_INVALID_FAN = 3, /**< structurally invalid fan */
    TG2_ERR_UNSUPPORTED = 4, /**< input outside the supported range */
    TG2_ERR_INTERNAL = 5     /**< internal invariant violation */
} tg2_status;

/** Library version as "major.minor.patch". */
const char* tg2_version(void);

/** Release a string returned by any function below.  NULL is allowed. */
void tg2_string_free(char* s);

/** Release a fan handle.  NULL is allowed. */
void tg2_fan_free(tg2_fan* fan);

/**
 * Parse a fan from JSON text (format "fan/1": dim, rays, max_cones).
 * The handle remembers the source bytes so reports can cite their hash.
 */
tg2_status tg2_fan_parse_json(const char* text, tg2_fan** out_fan,
                              char** out_error);

/**
 * Build a catalog fan by name; pass has_param = 0 for entries without a
 * parameter.  The canonical JSON emission acts as the handle's source text.
 */
tg2_status tg2_fan_from_catalog(const char* name, int has_param, long param,
                                tg2_fan** out_fan, char** out_error);

/** Canonical JSON emission of the fan (byte-stable, round-trips exactly). */
tg2_status tg2_fan_emit_json(const tg2_fan* fan, char** out_json);

/**
 * Structural validation.  deep > 0 forces the pairwise cone-separation
 * check, deep == 0 skips it, deep < 0 applies the default policy.
 * Always succeeds for a well-formed handle; the JSON document reports
 * {"valid": bool, "errors": [...]}.
 */
tg2_status tg2_fan_validate(const tg2_fan* fan, int deep, char** out_json);

/**
 * Full analysis report: structure, singularities, Fano test, gamma2
 * classification (schema "toricg2/check/1").  Fails with
 * TG2_ERR_INVALID_FAN if the fan does not validate.
 */
tg2_status tg2_check(const tg2_fan* fan, int deep, char** out_json,
                     char** out_error);

/**
 * Quadrilateral gamma2 value on the cone spanned by the given dim-2 ray
 * indices (schema "toricg2/gamma2/1").  The value equals
 * gamma2 . V(tau) up to a positive rational factor; its sign is exact.
 */
tg2_status tg2_gamma2_tau(const tg2_fan* fan, const int* tau, size_t tau_len,
                          char** out_json, char** out_error);

/**
 * Effective 2-cycle generators for Picard number 2: ray partition, sorted
 * chains and S1/S2/S3 with absence flags (schema "toricg2/ne2/1").
 */
tg2_status tg2_ne2(const tg2_fan* fan, char** out_json, char** out_error);

/**
 * Surface report for 2-dimensional fans: the table of divisor
 * self-intersections and gamma2 (schema "toricg2/surface/1").
 */
tg2_status tg2_surface(const tg2_fan* fan, char** out_json, char** out_error);

/** Catalog listing (schema "toricg2/catalog/1"). */
tg2_status tg2_catalog_list(char** out_json);

/**
 * Run the built-in verification suite.  as_json != 0 yields the schema
 * "toricg2/verify/1" document, otherwise a plain pass/fail matrix.
 * *out_all_passed (optional) is set to 1 iff every fixture passed.
 */
tg2_status tg2_verify(int as_json, char** out_text, int* out_all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TORICG2_TORICG2_H */
