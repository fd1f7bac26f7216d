#include "gossip/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace gossip {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void append_cell(std::string& out, const std::optional<double>& value) {
    out += ',';
    if (value) out += format_double(*value);
}

ordered_json number_or_null(const std::optional<double>& value) {
    if (value) return *value;
    return nullptr;
}

}  // namespace

std::string to_csv(const ComparisonReport& report) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const ComparisonRow& row : report.rows) {
        out += std::to_string(row.gap);
        out += ',';
        out += format_double(row.analytic_fraction);
        out += ',';
        out += format_double(row.analytic_age);
        append_cell(out, row.sim_fraction_mean);
        append_cell(out, row.sim_fraction_se);
        append_cell(out, row.sim_age_mean);
        append_cell(out, row.sim_age_se);
        append_cell(out, row.rel_err_fraction);
        append_cell(out, row.rel_err_age);
        out += ',';
        out += std::to_string(row.n_seeds);
        out += ',';
        out += format_double(report.config.horizon);
        out += ',';
        out += format_double(report.config.burn_in);
        out += '\n';
    }
    return out;
}

std::string to_json(const ComparisonReport& report) {
    const ExperimentConfig& config = report.config;

    ordered_json echo;
    echo["n"] = config.params.n;
    echo["lambda_e"] = config.params.lambda_e;
    echo["lambda_r"] = config.params.lambda_r;
    echo["lambda_u"] = config.params.lambda_u;
    echo["lambda"] = config.params.lambda_gossip;
    echo["gap_values"] = config.gap_values;
    echo["horizon"] = config.horizon;
    echo["burn_in"] = config.burn_in;
    echo["seeds"] = config.seeds;
    echo["mode"] = to_string(config.mode);
    echo["output_path"] = config.output_path;

    ordered_json rows = ordered_json::array();
    for (const ComparisonRow& row : report.rows) {
        ordered_json entry;
        entry["gap"] = row.gap;
        entry["analytic_F"] = row.analytic_fraction;
        entry["analytic_x1"] = row.analytic_age;
        entry["sim_F_mean"] = number_or_null(row.sim_fraction_mean);
        entry["sim_F_se"] = number_or_null(row.sim_fraction_se);
        entry["sim_x1_mean"] = number_or_null(row.sim_age_mean);
        entry["sim_x1_se"] = number_or_null(row.sim_age_se);
        entry["rel_err_F"] = number_or_null(row.rel_err_fraction);
        if (row.abs_err_fraction) entry["abs_err_F"] = *row.abs_err_fraction;
        entry["rel_err_x1"] = number_or_null(row.rel_err_age);
        if (row.abs_err_age) entry["abs_err_x1"] = *row.abs_err_age;
        entry["n_seeds"] = row.n_seeds;
        entry["horizon"] = config.horizon;
        entry["burn_in"] = config.burn_in;
        rows.push_back(std::move(entry));
    }

    ordered_json doc;
    doc["config"] = std::move(echo);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_report(const ComparisonReport& report, std::string_view format,
                  const std::filesystem::path& path) {
    std::string text;
    if (format == "csv") {
        text = to_csv(report);
    } else if (format == "json") {
        text = to_json(report);
    } else {
        throw std::invalid_argument("unknown report format: " + std::string(format));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed while writing " + path.string());
    }
}

}  // namespace gossip
