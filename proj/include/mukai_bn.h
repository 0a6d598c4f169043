/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the weak Brill-Noether toolkit for K3 surfaces of Picard
 * rank one.  All objects are opaque handles created and destroyed through
 * this interface; every fallible function returns an mbn_status and leaves a
 * human-readable message in mbn_last_error() on failure.
 *
 * Mukai vectors are passed as (r, d, a) with 64-bit integer coordinates and
 * stand for v = (r, dH, a) on a K3 surface with H^2 = 2n.  Internally all
 * arithmetic is exact and unbounded; results that do not fit in 64 bits are
 * reported as MBN_E_RANGE by the scalar accessors and as decimal strings in
 * the text (JSON/CSV) outputs.
 *
 * Thread safety: all functions may be called concurrently.  A handle may be
 * shared between threads for reading; destroying it while it is in use is
 * undefined.
 */

#ifndef MUKAI_BN_H
#define MUKAI_BN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MUKAI_BN_BUILDING)
#    define MBN_API __declspec(dllexport)
#  else
#    define MBN_API __declspec(dllimport)
#  endif
#else
#  define MBN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mbn_status {
    MBN_OK = 0,
    MBN_E_INVALID_ARGUMENT = 1, /* null pointer or unknown enum value */
    MBN_E_DOMAIN = 2,           /* input outside the domain of the operation */
    MBN_E_INTERNAL = 3,         /* two independent derivations disagree */
    MBN_E_IO = 4,               /* missing or malformed data file */
    MBN_E_RANGE = 5,            /* value does not fit the requested C type */
    MBN_E_UNDECIDED = 6,        /* the quantity is not determined */
    MBN_E_NO_MEMORY = 7
} mbn_status;

typedef enum mbn_format {
    MBN_FORMAT_JSON = 0,
    MBN_FORMAT_CSV = 1
} mbn_format;

typedef struct mbn_vector {
    int64_t r;
    int64_t d;
    int64_t a;
} mbn_vector;

typedef struct mbn_context mbn_context;         /* K3 surface of degree 2n */
typedef struct mbn_verdict mbn_verdict;         /* weak Brill-Noether decision */
typedef struct mbn_enumeration mbn_enumeration; /* result of an exhaustive search */
typedef struct mbn_text mbn_text;               /* owned NUL-terminated string */

/* Library version as "major.minor.patch". */
MBN_API const char* mbn_version(void);

/* Message of the last failure on the calling thread ("" if none). */
MBN_API const char* mbn_last_error(void);

/* Text buffers. */
MBN_API const char* mbn_text_data(const mbn_text* text);
MBN_API size_t mbn_text_size(const mbn_text* text);
MBN_API void mbn_text_destroy(mbn_text* text);

/* Surface context; n must be at least 1. */
MBN_API mbn_status mbn_context_create(int64_t n, mbn_context** out);
MBN_API int64_t mbn_context_n(const mbn_context* ctx);
MBN_API void mbn_context_destroy(mbn_context* ctx);

/* Drops memoised verdicts shared by all contexts. */
MBN_API void mbn_clear_cache(void);

/* ---- lattice --------------------------------------------------------- */

MBN_API mbn_status mbn_pairing(const mbn_context* ctx, mbn_vector u, mbn_vector v, int64_t* out);
MBN_API mbn_status mbn_twist(const mbn_context* ctx, mbn_vector v, int64_t p, mbn_vector* out);

/* ---- classification -------------------------------------------------- */

/* Decides weak Brill-Noether for r >= 0, d > 0, v^2 >= -2. */
MBN_API mbn_status mbn_classify(const mbn_context* ctx, mbn_vector v, mbn_verdict** out);
MBN_API void mbn_verdict_destroy(mbn_verdict* verdict);

/* *out = 1 (holds), 0 (fails) or -1 (undecided). */
MBN_API mbn_status mbn_verdict_wbn(const mbn_verdict* verdict, int* out);

/* (h0, h1, h2); MBN_E_UNDECIDED when the cohomology is not determined. */
MBN_API mbn_status mbn_verdict_cohomology(const mbn_verdict* verdict, int64_t out[3]);

/* Identifier of the deciding argument; owned by the verdict. */
MBN_API const char* mbn_verdict_rule(const mbn_verdict* verdict);

MBN_API mbn_vector mbn_verdict_vector(const mbn_verdict* verdict);
MBN_API int64_t mbn_verdict_n(const mbn_verdict* verdict);

/* One JSON object, or one CSV row without header. */
MBN_API mbn_status mbn_verdict_format(const mbn_verdict* verdict, mbn_format format, mbn_text** out);

/* "n,r,d,a,wbn,h0,h1,h2,rule" */
MBN_API const char* mbn_csv_header(void);

/* ---- enumeration ----------------------------------------------------- */

typedef struct mbn_enumerate_options {
    int64_t max_rank; /* at least 2 */
    int64_t n;        /* restrict to one surface when >= 1, all n < r when 0 */
    unsigned workers; /* 0 selects MUKAI_BN_WORKERS or the hardware count */
    int exhaustive;   /* nonzero: classify every a rather than stopping early */
} mbn_enumerate_options;

MBN_API mbn_status mbn_enumerate(const mbn_enumerate_options* options, mbn_enumeration** out);
MBN_API void mbn_enumeration_destroy(mbn_enumeration* e);

/* Failing vectors and vectors left undecided, each sorted by (n, r, d, a). */
MBN_API size_t mbn_enumeration_count(const mbn_enumeration* e);
MBN_API size_t mbn_enumeration_undecided_count(const mbn_enumeration* e);
MBN_API uint64_t mbn_enumeration_classified(const mbn_enumeration* e);

/* Borrowed views, valid while the enumeration lives. */
MBN_API const mbn_verdict* mbn_enumeration_get(const mbn_enumeration* e, size_t i);
MBN_API const mbn_verdict* mbn_enumeration_get_undecided(const mbn_enumeration* e, size_t i);

/* JSON array or CSV table (with header) of the failing and undecided
 * vectors, merged in (n, r, d, a) order. */
MBN_API mbn_status mbn_enumeration_format(const mbn_enumeration* e, mbn_format format, mbn_text** out);

/* Worker count: flag, else MUKAI_BN_WORKERS, else config, else hardware
 * threads.  Zero or negative arguments mean "not given".  MBN_E_DOMAIN when
 * MUKAI_BN_WORKERS is set but not a positive integer. */
MBN_API mbn_status mbn_resolve_workers(int64_t flag, int64_t config, unsigned* out);

/* ---- destabilizers and walls ---------------------------------------- */

typedef struct mbn_search_box {
    int64_t r1_max;
    int64_t d1_max;
    int64_t a1_max;
} mbn_search_box;

/* JSON {n, v, Dv, DvBN}. */
MBN_API mbn_status mbn_destab(const mbn_context* ctx, mbn_vector v, mbn_text** out);

/* Default box for the exhaustive scan of v. */
MBN_API mbn_status mbn_default_search_box(const mbn_context* ctx, mbn_vector v, mbn_search_box* out);

/* JSON array of destabilizers found by scanning the box (NULL: default box). */
MBN_API mbn_status mbn_brute_force_destab(const mbn_context* ctx, mbn_vector v, const mbn_search_box* box,
                                          mbn_text** out);

/* One record per destabilizer with the exact wall center, radius and height. */
MBN_API mbn_status mbn_walls(const mbn_context* ctx, mbn_vector v, mbn_format format, mbn_text** out);

/* ---- auxiliary criteria --------------------------------------------- */

typedef enum mbn_gg_status {
    MBN_GG_NO = 0,
    MBN_GG_YES = 1,
    MBN_GG_UNKNOWN = -1
} mbn_gg_status;

/* Global generation of the generic sheaf; out_json may be NULL. */
MBN_API mbn_status mbn_globally_generated(const mbn_context* ctx, mbn_vector v, mbn_gg_status* status,
                                          mbn_text** out_json);

/* Ulrich vector of rank r with respect to mH; *exists = 0 when r m is odd. */
MBN_API mbn_status mbn_ulrich(int64_t n, int64_t r, int64_t m, int* exists, mbn_vector* out);

typedef struct mbn_twisted_h1 {
    int exact;      /* nonzero when value is h^1(E(pH)) */
    int64_t value;
    int64_t lo;     /* valid lower bound */
    int has_hi;
    int64_t hi;     /* upper bound when has_hi */
} mbn_twisted_h1;

/* h^1(E(pH)) for p >= 0; either output pointer may be NULL. */
MBN_API mbn_status mbn_twisted_h1_compute(const mbn_context* ctx, mbn_vector v, int64_t p,
                                          mbn_twisted_h1* out, mbn_text** out_json);

/* ---- golden regression ---------------------------------------------- */

/* Compares enumeration and the twisted table with the files in data_dir.
 * *ok = 1 on a full match.  The report has one line per check. */
MBN_API mbn_status mbn_golden(int64_t max_rank, const char* data_dir, unsigned workers, int* ok,
                              mbn_text** report);

#ifdef __cplusplus
}
#endif

#endif /* MUKAI_BN_H */
