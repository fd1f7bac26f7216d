/* C interface to the gossip steady-state solver, simulator and sweep
 * harness. All entry points return a gossip_status; on failure a
 * human-readable message is available from gossip_last_error() until the
 * next call on the same thread. Objects are opaque handles created and
 * released through the matching _create/_free pair. */

#ifndef GOSSIP_CAPI_H
#define GOSSIP_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gossip_status {
    GOSSIP_OK = 0,
    GOSSIP_ERR_INVALID_ARGUMENT = 1,
    GOSSIP_ERR_RUNTIME = 2,
    GOSSIP_ERR_IO = 3,
} gossip_status;

typedef struct gossip_params gossip_params;
typedef struct gossip_sweep_config gossip_sweep_config;
typedef struct gossip_report gossip_report;

/* Message of the most recent failure on the calling thread; "" if none. */
const char* gossip_last_error(void);

/* ---- model parameters ---------------------------------------------- */

/* n >= 1, lambda_e > 0, lambda_r > 0, lambda_u >= 0, lambda_gossip >= 0. */
gossip_status gossip_params_create(uint32_t n, double lambda_e, double lambda_r,
                                   double lambda_u, double lambda_gossip,
                                   uint32_t gap, gossip_params** out);
void gossip_params_free(gossip_params* params);

/* ---- exact steady-state solver -------------------------------------- */

typedef struct gossip_analytic_summary {
    double fraction_unreliable; /* long-run expected fraction of nodes on unreliable packets */
    double version_age;         /* long-run expected version age at a node */
} gossip_analytic_summary;

gossip_status gossip_solve(const gossip_params* params, gossip_analytic_summary* out);

/* Version age in the gap = 0 regime (both sources pooled). */
gossip_status gossip_limit_age_gap_zero(const gossip_params* params, double* out);

/* Version age in the gap -> infinity regime (unreliable source ignored). */
gossip_status gossip_limit_age_gap_infinite(const gossip_params* params, double* out);

/* ---- Monte Carlo simulator ------------------------------------------ */

typedef struct gossip_sim_estimates {
    double fraction_unreliable;
    double version_age;
    double horizon;
    double burn_in;
    uint64_t seed;
} gossip_sim_estimates;

/* One event-driven run over (burn_in, horizon]. Deterministic per seed. */
gossip_status gossip_simulate(const gossip_params* params, double horizon,
                              double burn_in, uint64_t seed,
                              gossip_sim_estimates* out);

/* ---- gap sweep harness ----------------------------------------------- */

/* A fresh config carries the default network (n=50, lambda_e=2, lambda_r=1,
 * lambda_u=5, lambda=0.1), horizon 1e5 with burn-in 1e4, analytic mode, no
 * gaps and no seeds. */
gossip_status gossip_sweep_config_create(gossip_sweep_config** out);
void gossip_sweep_config_free(gossip_sweep_config* config);

gossip_status gossip_sweep_config_set_network(gossip_sweep_config* config,
                                              uint32_t n, double lambda_e,
                                              double lambda_r, double lambda_u,
                                              double lambda_gossip);
gossip_status gossip_sweep_config_set_gaps(gossip_sweep_config* config,
                                           const uint32_t* gaps, size_t count);
gossip_status gossip_sweep_config_set_window(gossip_sweep_config* config,
                                             double horizon, double burn_in);
gossip_status gossip_sweep_config_set_seeds(gossip_sweep_config* config,
                                            const uint64_t* seeds, size_t count);
/* mode: "analytic", "simulate" or "compare". */
gossip_status gossip_sweep_config_set_mode(gossip_sweep_config* config, const char* mode);
/* Worker threads for simulator runs; 0 = hardware concurrency. Does not
 * influence report contents. */
gossip_status gossip_sweep_config_set_jobs(gossip_sweep_config* config, unsigned jobs);
/* Path echoed into the report; "-" conventionally means stdout. */
gossip_status gossip_sweep_config_set_output_path(gossip_sweep_config* config,
                                                  const char* path);

gossip_status gossip_sweep_run(const gossip_sweep_config* config, gossip_report** out);
void gossip_report_free(gossip_report* report);

/* Renders to "csv" or "json". *out is heap-allocated and must be released
 * with gossip_string_free. */
gossip_status gossip_report_render(const gossip_report* report, const char* format,
                                   char** out);
/* Writes the rendered report to a file; failures carry the path. */
gossip_status gossip_report_write(const gossip_report* report, const char* format,
                                  const char* path);
void gossip_string_free(char* str);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GOSSIP_CAPI_H */
