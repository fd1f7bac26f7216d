#include "gossip_capi.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "gossip/analytics.hpp"
#include "gossip/report_io.hpp"
#include "gossip/simulator.hpp"
#include "gossip/sweep.hpp"

struct gossip_params {
    gossip::Params value;
};

struct gossip_sweep_config {
    gossip::ExperimentConfig value;
};

struct gossip_report {
    gossip::ComparisonReport value;
};

namespace {

thread_local std::string t_last_error;

gossip_status invalid(const char* message) {
    t_last_error = message;
    return GOSSIP_ERR_INVALID_ARGUMENT;
}

template <typename Fn>
gossip_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return GOSSIP_OK;
    } catch (const gossip::IoError& error) {
        t_last_error = error.what();
        return GOSSIP_ERR_IO;
    } catch (const std::invalid_argument& error) {
        t_last_error = error.what();
        return GOSSIP_ERR_INVALID_ARGUMENT;
    } catch (const std::out_of_range& error) {
        t_last_error = error.what();
        return GOSSIP_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& error) {
        t_last_error = error.what();
        return GOSSIP_ERR_RUNTIME;
    } catch (...) {
        t_last_error = "unknown error";
        return GOSSIP_ERR_RUNTIME;
    }
}

}  // namespace

extern "C" {

const char* gossip_last_error(void) { return t_last_error.c_str(); }

gossip_status gossip_params_create(uint32_t n, double lambda_e, double lambda_r,
                                   double lambda_u, double lambda_gossip,
                                   uint32_t gap, gossip_params** out) {
    if (out == nullptr) return invalid("out pointer is null");
    *out = nullptr;
    return guarded([&] {
        gossip::Params params{n, lambda_e, lambda_r, lambda_u, lambda_gossip, gap};
        params.validate();
        *out = new gossip_params{params};
    });
}

void gossip_params_free(gossip_params* params) { delete params; }

gossip_status gossip_solve(const gossip_params* params, gossip_analytic_summary* out) {
    if (params == nullptr) return invalid("params is null");
    if (out == nullptr) return invalid("out pointer is null");
    return guarded([&] {
        const gossip::AnalyticResult result = gossip::solve(params->value);
        out->fraction_unreliable = result.fraction_unreliable;
        out->version_age = result.version_age;
    });
}

gossip_status gossip_limit_age_gap_zero(const gossip_params* params, double* out) {
    if (params == nullptr) return invalid("params is null");
    if (out == nullptr) return invalid("out pointer is null");
    return guarded([&] { *out = gossip::limit_age_gap_zero(params->value); });
}

gossip_status gossip_limit_age_gap_infinite(const gossip_params* params, double* out) {
    if (params == nullptr) return invalid("params is null");
    if (out == nullptr) return invalid("out pointer is null");
    return guarded([&] { *out = gossip::limit_age_gap_infinite(params->value); });
}

gossip_status gossip_simulate(const gossip_params* params, double horizon,
                              double burn_in, uint64_t seed,
                              gossip_sim_estimates* out) {
    if (params == nullptr) return invalid("params is null");
    if (out == nullptr) return invalid("out pointer is null");
    return guarded([&] {
        const gossip::Estimates estimates =
            gossip::run(params->value, horizon, burn_in, seed);
        out->fraction_unreliable = estimates.fraction_unreliable;
        out->version_age = estimates.version_age;
        out->horizon = estimates.horizon;
        out->burn_in = estimates.burn_in;
        out->seed = estimates.seed;
    });
}

gossip_status gossip_sweep_config_create(gossip_sweep_config** out) {
    if (out == nullptr) return invalid("out pointer is null");
    *out = nullptr;
    return guarded([&] { *out = new gossip_sweep_config{}; });
}

void gossip_sweep_config_free(gossip_sweep_config* config) { delete config; }

gossip_status gossip_sweep_config_set_network(gossip_sweep_config* config,
                                              uint32_t n, double lambda_e,
                                              double lambda_r, double lambda_u,
                                              double lambda_gossip) {
    if (config == nullptr) return invalid("config is null");
    return guarded([&] {
        gossip::Params params{n, lambda_e, lambda_r, lambda_u, lambda_gossip, 0};
        params.validate();
        config->value.params = params;
    });
}

gossip_status gossip_sweep_config_set_gaps(gossip_sweep_config* config,
                                           const uint32_t* gaps, size_t count) {
    if (config == nullptr) return invalid("config is null");
    if (gaps == nullptr && count > 0) return invalid("gaps pointer is null");
    return guarded([&] {
        for (size_t i = 1; i < count; ++i) {
            if (gaps[i] <= gaps[i - 1]) {
                throw std::invalid_argument("gap values must be strictly increasing");
            }
        }
        config->value.gap_values.assign(gaps, gaps + count);
    });
}

gossip_status gossip_sweep_config_set_window(gossip_sweep_config* config,
                                             double horizon, double burn_in) {
    if (config == nullptr) return invalid("config is null");
    return guarded([&] {
        if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
        if (!(burn_in >= 0.0) || burn_in >= horizon) {
            throw std::invalid_argument("burn-in must lie in [0, horizon)");
        }
        config->value.horizon = horizon;
        config->value.burn_in = burn_in;
    });
}

gossip_status gossip_sweep_config_set_seeds(gossip_sweep_config* config,
                                            const uint64_t* seeds, size_t count) {
    if (config == nullptr) return invalid("config is null");
    if (seeds == nullptr && count > 0) return invalid("seeds pointer is null");
    return guarded([&] { config->value.seeds.assign(seeds, seeds + count); });
}

gossip_status gossip_sweep_config_set_mode(gossip_sweep_config* config, const char* mode) {
    if (config == nullptr) return invalid("config is null");
    if (mode == nullptr) return invalid("mode is null");
    const auto parsed = gossip::mode_from_string(mode);
    if (!parsed) {
        t_last_error = "unknown mode: " + std::string(mode);
        return GOSSIP_ERR_INVALID_ARGUMENT;
    }
    config->value.mode = *parsed;
    t_last_error.clear();
    return GOSSIP_OK;
}

gossip_status gossip_sweep_config_set_jobs(gossip_sweep_config* config, unsigned jobs) {
    if (config == nullptr) return invalid("config is null");
    config->value.jobs = jobs;
    t_last_error.clear();
    return GOSSIP_OK;
}

gossip_status gossip_sweep_config_set_output_path(gossip_sweep_config* config,
                                                  const char* path) {
    if (config == nullptr) return invalid("config is null");
    if (path == nullptr) return invalid("path is null");
    config->value.output_path = path;
    t_last_error.clear();
    return GOSSIP_OK;
}

gossip_status gossip_sweep_run(const gossip_sweep_config* config, gossip_report** out) {
    if (config == nullptr) return invalid("config is null");
    if (out == nullptr) return invalid("out pointer is null");
    *out = nullptr;
    return guarded([&] {
        gossip::ComparisonReport report = gossip::sweep(config->value);
        *out = new gossip_report{std::move(report)};
    });
}

void gossip_report_free(gossip_report* report) { delete report; }

gossip_status gossip_report_render(const gossip_report* report, const char* format,
                                   char** out) {
    if (report == nullptr) return invalid("report is null");
    if (format == nullptr) return invalid("format is null");
    if (out == nullptr) return invalid("out pointer is null");
    *out = nullptr;
    return guarded([&] {
        std::string text;
        if (std::strcmp(format, "csv") == 0) {
            text = gossip::to_csv(report->value);
        } else if (std::strcmp(format, "json") == 0) {
            text = gossip::to_json(report->value);
        } else {
            throw std::invalid_argument("unknown report format: " + std::string(format));
        }
        char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
        if (buffer == nullptr) throw std::bad_alloc();
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
    });
}

gossip_status gossip_report_write(const gossip_report* report, const char* format,
                                  const char* path) {
    if (report == nullptr) return invalid("report is null");
    if (format == nullptr) return invalid("format is null");
    if (path == nullptr) return invalid("path is null");
    return guarded([&] { gossip::write_report(report->value, format, path); });
}

void gossip_string_free(char* str) { std::free(str); }

}  // extern "C"
