#ifndef DIHEDRAL_DIHEDRAL_H
#define DIHEDRAL_DIHEDRAL_H

#include <stdint.h>

#if defined(DIHEDRAL_BUILDING_LIBRARY)
#define DH_API __attribute__((visibility("default")))
#else
#define DH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dh_status {
  DH_OK = 0,
  /* The job ran and reports a failed hypothesis or rejected input. */
  DH_HYPOTHESIS_FAILED = 1,
  DH_USAGE_ERROR = 2,
  DH_PARSE_ERROR = 3,
  DH_DOMAIN_ERROR = 4,
  DH_INVARIANT_VIOLATION = 5,
  DH_NULL_ARGUMENT = 6,
  DH_INTERNAL_ERROR = 7
} dh_status;

/* Field selector and seed shared by the jobs run through it. */
typedef struct dh_context dh_context;
/* Output document of one job or one batch. */
typedef struct dh_result dh_result;

DH_API const char* dh_version(void);
DH_API const char* dh_status_string(dh_status status);

/* field is "Q" or "Fp:<p>"; NULL selects Q. Returns NULL on failure and sets *status. */
DH_API dh_context* dh_context_new(const char* field, uint64_t seed, dh_status* status);
DH_API void dh_context_free(dh_context* ctx);
DH_API uint64_t dh_context_seed(const dh_context* ctx);
DH_API const char* dh_context_field(const dh_context* ctx);
/* Message of the last failed call on this context, or "". */
DH_API const char* dh_context_last_error(const dh_context* ctx);

/*
 * Runs one command (torsion, pic, cover, deform, check, dn-table, jacobian)
 * on a JSON input document. On return *out holds the output document even
 * when the job failed; free it with dh_result_free.
 */
DH_API dh_status dh_run(dh_context* ctx, const char* command, const char* input_json, dh_result** out);
/* input_json is an array of {"command": ..., "input": {...}}; outputs keep the input order. */
DH_API dh_status dh_run_batch(dh_context* ctx, const char* input_json, dh_result** out);

DH_API const char* dh_result_json(const dh_result* result);
DH_API dh_status dh_result_status(const dh_result* result);
/* 0 computed, 1 hypothesis or validation failure, 2 usage or parse error. */
DH_API int dh_result_exit_code(const dh_result* result);
DH_API void dh_result_free(dh_result* result);

#ifdef __cplusplus
}
#endif

#endif
