#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gossip/params.hpp"

namespace gossip {

enum class Mode {
    analytic,  ///< recurrence solver only
    simulate,  ///< solver plus Monte Carlo estimates
    compare,   ///< solver plus Monte Carlo plus error columns
};

std::string to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view text);

/** One experiment: a gap sweep at fixed network parameters. */
struct ExperimentConfig {
    Params params;  ///< network parameters; the per-row gap comes from gap_values
    std::vector<std::uint32_t> gap_values;
    double horizon = 1e5;
    double burn_in = 1e4;
    std::vector<std::uint64_t> seeds;  ///< one simulator run per seed; may be empty in analytic mode
    std::string output_path = "-";
    Mode mode = Mode::analytic;
    /// Simulator worker threads; 0 picks the hardware concurrency.
    /// Execution detail only: never echoed into reports, never affects output bytes.
    unsigned jobs = 0;

    void validate() const;
};

/** One gap point of a report. Simulation fields are set in simulate/compare
 *  modes, error fields only in compare mode. A relative error is absent when
 *  the analytic value is zero; the absolute error is reported instead. */
struct ComparisonRow {
    std::uint32_t gap = 0;
    double analytic_fraction = 0.0;
    double analytic_age = 0.0;
    std::optional<double> sim_fraction_mean;
    std::optional<double> sim_fraction_se;
    std::optional<double> sim_age_mean;
    std::optional<double> sim_age_se;
    std::optional<double> rel_err_fraction;
    std::optional<double> rel_err_age;
    std::optional<double> abs_err_fraction;
    std::optional<double> abs_err_age;
    std::size_t n_seeds = 0;
};

struct ComparisonReport {
    ExperimentConfig config;
    std::vector<ComparisonRow> rows;
};

/** Runs the experiment: the analytic solver at every gap, plus one simulator
 *  run per (gap, seed) in simulate/compare modes. Simulator runs execute on
 *  config.jobs workers; rows and seed aggregation keep deterministic
 *  (gap, seed) order regardless of scheduling. Simulator failures are
 *  reported with the offending gap and seed. */
ComparisonReport sweep(const ExperimentConfig& config);

}  // namespace gossip
