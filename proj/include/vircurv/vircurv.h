#ifndef VIRCURV_VIRCURV_H
#define VIRCURV_VIRCURV_H

/*
 * C interface to the vircurv engine.
 *
 * A session holds the parameters (c, h), the sign convention, the output
 * format, and the last error. Calls that produce output allocate a
 * NUL-terminated string that the caller releases with vircurv_string_free.
 * A session may be used by one thread at a time; distinct sessions are
 * independent.
 */

#include <stddef.h>

#if defined(VIRCURV_BUILDING)
#define VIRCURV_API __attribute__((visibility("default")))
#else
#define VIRCURV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vircurv_session vircurv_session;
typedef struct vircurv_field vircurv_field;

typedef enum vircurv_status {
    VIRCURV_OK = 0,
    VIRCURV_ERR_PARSE = 1,     /* malformed text; see vircurv_last_error_offset */
    VIRCURV_ERR_DOMAIN = 2,    /* input outside the operation's domain */
    VIRCURV_ERR_PARAMETER = 3, /* theta_k <= 0 in the range the call needs */
    VIRCURV_ERR_USAGE = 4,     /* bad argument: unknown suite, null pointer, ... */
    VIRCURV_ERR_INTERNAL = 5
} vircurv_status;

typedef enum vircurv_format {
    VIRCURV_FORMAT_TEXT = 0,
    VIRCURV_FORMAT_JSON = 1,
    VIRCURV_FORMAT_CSV = 2
} vircurv_format;

typedef enum vircurv_convention {
    VIRCURV_CONVENTION_PAPER = 0,
    VIRCURV_CONVENTION_NOMIZU = 1
} vircurv_convention;

/* Field-valued binary operations on two fields. */
typedef enum vircurv_binary_op {
    VIRCURV_OP_BRACKET = 0,       /* [x, y] */
    VIRCURV_OP_U_TENSOR = 1,      /* U(x, y) */
    VIRCURV_OP_NABLA = 2,         /* nabla_x y */
    VIRCURV_OP_NABLA_TILDE = 3,   /* nabla~_x y = nabla_x y - Q(x, y) */
    VIRCURV_OP_NIJENHUIS = 4,     /* N(x, y) */
    VIRCURV_OP_Q_TENSOR = 5,      /* Q(x, y) */
    VIRCURV_OP_NABLA_J = 6,       /* (nabla_x J)(y) */
    VIRCURV_OP_TORSION = 7,       /* torsion of nabla */
    VIRCURV_OP_TORSION_TILDE = 8  /* torsion of nabla~ */
} vircurv_binary_op;

VIRCURV_API const char* vircurv_version(void);

/* Session starts at c = 12, h = 1/2, paper convention, text output, 1 thread. */
VIRCURV_API vircurv_status vircurv_session_create(vircurv_session** out);
VIRCURV_API void vircurv_session_destroy(vircurv_session* session);

/* c and h as "p/q" text. On failure the previous parameters are kept. */
VIRCURV_API vircurv_status vircurv_session_set_params(vircurv_session* session, const char* c, const char* h);
VIRCURV_API vircurv_status vircurv_session_set_convention(vircurv_session* session, vircurv_convention convention);
VIRCURV_API vircurv_status vircurv_session_set_format(vircurv_session* session, vircurv_format format);
VIRCURV_API vircurv_status vircurv_session_set_threads(vircurv_session* session, unsigned threads);
VIRCURV_API vircurv_status vircurv_session_set_timing(vircurv_session* session, int enabled);

/* Message of the last failed call on this session ("" after success). */
VIRCURV_API const char* vircurv_last_error(const vircurv_session* session);
/* 0-based offset of the last parse error, or -1. */
VIRCURV_API long vircurv_last_error_offset(const vircurv_session* session);

VIRCURV_API vircurv_status vircurv_field_parse(vircurv_session* session, const char* text, vircurv_field** out);
VIRCURV_API void vircurv_field_destroy(vircurv_field* field);
/* Canonical text, independent of the session format. */
VIRCURV_API vircurv_status vircurv_field_render(vircurv_session* session, const vircurv_field* field, char** out);

VIRCURV_API vircurv_status vircurv_binary(vircurv_session* session, vircurv_binary_op op, const vircurv_field* x,
                                          const vircurv_field* y, char** out);
/* [x, y] in the central extension: cocycle coefficient of kappa plus the field bracket. */
VIRCURV_API vircurv_status vircurv_virasoro_bracket(vircurv_session* session, const vircurv_field* x,
                                                    const vircurv_field* y, char** out);
VIRCURV_API vircurv_status vircurv_cocycle(vircurv_session* session, const vircurv_field* x, const vircurv_field* y,
                                           char** out);
/* B(x, y) = omega(x, J y). */
VIRCURV_API vircurv_status vircurv_inner(vircurv_session* session, const vircurv_field* x, const vircurv_field* y,
                                         char** out);
/* B(D_x y, z) + B(y, D_x z) with D = nabla, or nabla~ when `tilde` is nonzero. */
VIRCURV_API vircurv_status vircurv_metric_defect(vircurv_session* session, const vircurv_field* x,
                                                 const vircurv_field* y, const vircurv_field* z, int tilde,
                                                 char** out);
VIRCURV_API vircurv_status vircurv_hs_sum(vircurv_session* session, long n, long max_m, char** out);
/* R~_{L_x, L_y} L_z for nonzero signed indices. */
VIRCURV_API vircurv_status vircurv_curvature(vircurv_session* session, long x, long y, long z, char** out);
VIRCURV_API vircurv_status vircurv_ricci(vircurv_session* session, long n, const long* cutoffs, size_t count,
                                         char** out);
/* *all_passed is set to 1 when no check failed. */
VIRCURV_API vircurv_status vircurv_verify(vircurv_session* session, const char* suite, long max_mode,
                                          int* all_passed, char** out);

VIRCURV_API void vircurv_string_free(char* text);

/* Process exit code for a finished call: 0 success, 1 a verification check
 * failed, 2 parse/domain/parameter/usage error, 3 internal error. */
VIRCURV_API int vircurv_exit_code(vircurv_status status, int all_passed);

#ifdef __cplusplus
}
#endif

#endif /* VIRCURV_VIRCURV_H */
