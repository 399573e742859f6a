/* Copyright 2026 The tiltcheck Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the tiltcheck engine. Every entry point that produces a
 * report returns a status and, on TILT_OK or TILT_VERIFICATION_FAILED, stores
 * a report handle in *out that the caller releases with tilt_report_free.
 * On TILT_INVALID_INPUT or TILT_INTERNAL, *out is set to NULL and
 * tilt_last_error describes the failure.
 */
#ifndef TILT_TILT_H_
#define TILT_TILT_H_

#include <stddef.h>

#if defined(_WIN32)
#define TILT_API __declspec(dllexport)
#else
#define TILT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tilt_report tilt_report;

typedef enum {
  TILT_OK = 0,
  TILT_VERIFICATION_FAILED = 1,
  TILT_INVALID_INPUT = 2,
  TILT_INTERNAL = 3
} tilt_status;

typedef enum { TILT_VERDICT_PASS = 0, TILT_VERDICT_FAIL = 1, TILT_VERDICT_NA = 2 } tilt_verdict;

/* Engine version string, e.g. "tiltcheck 0.1.0". */
TILT_API const char* tilt_version(void);
/* Message of the last failed call on this thread ("" if none). */
TILT_API const char* tilt_last_error(void);
/* Worker threads for table sweeps; 0 means hardware concurrency. */
TILT_API void tilt_set_jobs(int jobs);

/* Box partitions for Grass(d, n); order is "size_order" or "containment_order". */
TILT_API tilt_status tilt_partitions(int d, int n, const char* order, tilt_report** out);
TILT_API tilt_status tilt_lr(const int* lambda, size_t lambda_len, const int* mu, size_t mu_len, int n, tilt_report** out);
TILT_API tilt_status tilt_schur_dim(const int* weight, size_t len, int n, tilt_report** out);

typedef enum {
  TILT_BUNDLE_SUB = 0,      /* Σ^w(R) on a Grassmannian */
  TILT_BUNDLE_SUB_DUAL = 1, /* Σ^w(R^∨) on a Grassmannian */
  TILT_BUNDLE_QUOT = 2,     /* Σ^w(Q) on a Grassmannian */
  TILT_BUNDLE_BLOCKS = 3    /* concatenated blocks, split by the space's block lengths */
} tilt_bundle_kind;

/* space is "grass:d,n", "pn:m" or "flag:l_1,...,l_m;n". */
TILT_API tilt_status tilt_bott(const char* space, tilt_bundle_kind kind, const int* weight, size_t len, tilt_report** out);
TILT_API tilt_status tilt_euler(const int* lambda, size_t lambda_len, const int* mu, size_t mu_len, int d, int n,
                       tilt_report** out);

typedef struct {
  const char* family; /* kapranov | kapranov-forward | flag | beilinson | wedge */
  int d;
  int n;
  const int* steps; /* flag only */
  size_t steps_len;
  const char* const* multiplicities; /* decimal strings, one per object; NULL for all 1 */
  size_t multiplicities_len;
  int twist;
} tilt_verify_request;

TILT_API tilt_status tilt_verify(const tilt_verify_request* request, tilt_report** out);

typedef struct {
  int degree;
  int period;
  const int* index_table; /* entry k is ind(A^k) for k in [0, period); NULL for the cyclic model */
  size_t index_table_len;
} tilt_algebra;

/* summand_count 0 means the degree of the algebra. */
TILT_API tilt_status tilt_descent_bs(const tilt_algebra* algebra, int summand_count, tilt_report** out);
TILT_API tilt_status tilt_descent_gbs(const tilt_algebra* algebra, int d, tilt_report** out);
TILT_API tilt_status tilt_descent_tower(const char* path, tilt_report** out);
TILT_API tilt_status tilt_descent_tower_json(const char* json_text, tilt_report** out);

/* search != 0 ignores the plan's twists; a negative cap keeps the plan's cap. */
TILT_API tilt_status tilt_fibration(const char* plan_path, int search, int cap, tilt_report** out);
/* Runs the listed acceptance criteria, or all of them when count is 0. */
TILT_API tilt_status tilt_selftest(const int* criteria, size_t count, tilt_report** out);

/* Canonical JSON (pretty = 0) or indented JSON, newline-terminated; owned by the report. */
TILT_API const char* tilt_report_json(const tilt_report* report, int pretty);
TILT_API const char* tilt_report_command(const tilt_report* report);
TILT_API tilt_verdict tilt_report_verdict(const tilt_report* report);
TILT_API void tilt_report_free(tilt_report* report);

#ifdef __cplusplus
}
#endif

#endif /* TILT_TILT_H_ */
