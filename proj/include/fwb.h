/* C interface of the workbench. Every computation returns a status code; on
 * success the report is a malloc'd JSON document owned by the caller (release
 * with fwb_string_free). On failure fwb_last_error() describes the problem
 * for the calling thread. */
#ifndef FWB_H
#define FWB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FWB_API __declspec(dllexport)
#else
#define FWB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fwb_status {
  FWB_OK = 0,
  FWB_ERR_PARSE = 1,
  FWB_ERR_INVALID_ARGUMENT = 2,
  FWB_ERR_RING_MISMATCH = 3,
  FWB_ERR_RESOURCE_LIMIT = 4,
  FWB_ERR_INCONSISTENT = 5,
  FWB_ERR_IO = 6,
  FWB_ERR_INTERNAL = 7
} fwb_status;

typedef enum fwb_route {
  FWB_ROUTE_AUTO = 0,
  FWB_ROUTE_ELIMINATION = 1,
  FWB_ROUTE_LINEAR_ALGEBRA = 2
} fwb_route;

typedef struct fwb_ring fwb_ring;

typedef struct fwb_config {
  uint64_t seed;
  int trunc;
  int e_max;
  int window;
  int samples;
  int power_max;
  int jobs;
  int64_t max_pairs;
  int max_degree;
  /* Nonzero: add a top-level "timestamp" to every report. */
  int timestamp;
} fwb_config;

FWB_API const char* fwb_version(void);
FWB_API void fwb_config_default(fwb_config* config);
FWB_API const char* fwb_last_error(void);
FWB_API const char* fwb_status_name(fwb_status status);
FWB_API void fwb_string_free(char* text);

/* source: a ring-spec JSON file path or "corpus:<label>". Caps from config
 * (may be NULL for defaults). */
FWB_API fwb_status fwb_ring_load(const char* source, const fwb_config* config, fwb_ring** out);
FWB_API fwb_status fwb_ring_from_json(const char* json, const fwb_config* config, fwb_ring** out);
FWB_API void fwb_ring_free(fwb_ring* ring);
FWB_API int fwb_ring_dim(const fwb_ring* ring);
FWB_API fwb_status fwb_ring_describe(const fwb_ring* ring, char** json_out);

FWB_API fwb_status fwb_corpus(const fwb_config* config, char** json_out);

/* Ideals and sequences are comma-separated polynomial strings. Optional
 * string arguments accept NULL. */
FWB_API fwb_status fwb_gb(const fwb_ring* ring, const char* ideal, const fwb_config* config,
                          char** json_out);
FWB_API fwb_status fwb_nf(const fwb_ring* ring, const char* poly, const char* ideal,
                          const fwb_config* config, char** json_out);
FWB_API fwb_status fwb_dim(const fwb_ring* ring, const char* ideal, const fwb_config* config,
                           char** json_out);
FWB_API fwb_status fwb_colon(const fwb_ring* ring, const char* ideal, const char* by,
                             const fwb_config* config, char** json_out);
/* by == NULL saturates at the maximal ideal. */
FWB_API fwb_status fwb_sat(const fwb_ring* ring, const char* ideal, const char* by,
                           const fwb_config* config, char** json_out);
FWB_API fwb_status fwb_filter_check(const fwb_ring* ring, const char* sequence,
                                    const fwb_config* config, char** json_out);
FWB_API fwb_status fwb_sop_random(const fwb_ring* ring, const fwb_config* config, char** json_out);

FWB_API fwb_status fwb_frobenius_power(const fwb_ring* ring, const char* ideal, int e,
                                       const fwb_config* config, char** json_out);
FWB_API fwb_status fwb_frobenius_preimage(const fwb_ring* ring, const char* ideal, int e,
                                          fwb_route route, const fwb_config* config,
                                          char** json_out);
FWB_API fwb_status fwb_frobenius_closure(const fwb_ring* ring, const char* ideal,
                                         const fwb_config* config, char** json_out);
FWB_API fwb_status fwb_fte(const fwb_ring* ring, const char* ideal, const fwb_config* config,
                           char** json_out);
FWB_API fwb_status fwb_fte_scan(const fwb_ring* ring, const fwb_config* config, char** json_out);

/* sop == NULL draws a filter regular sop from config->seed. */
FWB_API fwb_status fwb_hsl(const fwb_ring* ring, const char* sop, const fwb_config* config,
                           char** json_out);
/* Two sops drawn from *seed_a and *seed_b; NULL derives them from
 * config->seed (streams 0 and 1). */
FWB_API fwb_status fwb_ns_check(const fwb_ring* ring, const uint64_t* seed_a, const uint64_t* seed_b,
                                const fwb_config* config, char** json_out);
FWB_API fwb_status fwb_prop34_check(const fwb_ring* ring, const char* sop, int t, int n, int e,
                                    const fwb_config* config, char** json_out);
FWB_API fwb_status fwb_verify_inequality(const fwb_ring* ring, const fwb_config* config,
                                         char** json_out);

/* Aligned text rendering of any report document. */
FWB_API fwb_status fwb_render_table(const char* json, char** text_out);

#ifdef __cplusplus
}
#endif

#endif
