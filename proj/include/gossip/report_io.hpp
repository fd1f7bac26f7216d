#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gossip/sweep.hpp"

namespace gossip {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact column list of the CSV serialization.
inline constexpr std::string_view kCsvHeader =
    "gap,analytic_F,analytic_x1,sim_F_mean,sim_F_se,sim_x1_mean,sim_x1_se,"
    "rel_err_F,rel_err_x1,n_seeds,horizon,burn_in";

/** CSV rendering: header plus one row per gap, floats at 12 significant
 *  digits, absent values as empty cells. */
std::string to_csv(const ComparisonReport& report);

/** JSON rendering: `config` echoes the experiment configuration (seeds
 *  included), `rows` mirrors the CSV columns with absent values as null;
 *  rows whose relative error is null for a zero analytic value carry the
 *  absolute error instead. Numbers are native JSON numbers at full
 *  round-trip precision. Byte-stable for a fixed report. */
std::string to_json(const ComparisonReport& report);

/** Writes the report to `path` in the given format ("csv" or "json").
 *  Throws IoError naming the path on any filesystem failure. */
void write_report(const ComparisonReport& report, std::string_view format,
                  const std::filesystem::path& path);

}  // namespace gossip
