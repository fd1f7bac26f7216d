// Command-line front end over the shared-library C API. Subcommands map to
// the one experiment pipeline: `solve` is an analytic run at a single gap,
// `simulate` a Monte Carlo run at a single gap, `sweep` the general form.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gossip_capi.h"

namespace {

struct RawOptions {
    std::optional<uint32_t> n;
    std::optional<double> lambda_e;
    std::optional<double> lambda_r;
    std::optional<double> lambda_u;
    std::optional<double> lambda;
    std::optional<uint32_t> gap;
    std::optional<std::string> gaps;
    std::optional<double> horizon;
    std::optional<double> burn_in;
    std::optional<std::string> seeds;
    std::optional<std::string> mode;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::string> config;
    std::optional<unsigned> jobs;
};

struct FileConfig {
    std::optional<uint32_t> n;
    std::optional<double> lambda_e;
    std::optional<double> lambda_r;
    std::optional<double> lambda_u;
    std::optional<double> lambda;
    std::optional<std::vector<uint32_t>> gap_values;
    std::optional<double> horizon;
    std::optional<double> burn_in;
    std::optional<std::vector<uint64_t>> seeds;
    std::optional<std::string> mode;
    std::optional<std::string> format;
    std::optional<std::string> output_path;
    std::optional<unsigned> jobs;
};

struct Effective {
    uint32_t n = 50;
    double lambda_e = 2.0;
    double lambda_r = 1.0;
    double lambda_u = 5.0;
    double lambda = 0.1;
    std::vector<uint32_t> gaps;
    double horizon = 1e5;
    double burn_in = 1e4;
    std::vector<uint64_t> seeds;
    std::string mode = "analytic";
    std::string format = "csv";
    std::string out = "-";
    unsigned jobs = 0;
};

bool parse_uint(std::string_view text, uint64_t& out) {
    if (text.empty()) return false;
    uint64_t value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) return false;
    out = value;
    return true;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        const size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// "a..b" is an inclusive range; otherwise a comma list.
std::optional<std::vector<uint32_t>> parse_gap_list(const std::string& text,
                                                    std::string& error) {
    std::vector<uint32_t> gaps;
    const size_t range = text.find("..");
    if (range != std::string::npos) {
        uint64_t lo = 0;
        uint64_t hi = 0;
        if (!parse_uint(text.substr(0, range), lo) ||
            !parse_uint(text.substr(range + 2), hi) || hi > UINT32_MAX) {
            error = "bad gap range: " + text;
            return std::nullopt;
        }
        if (lo > hi) {
            error = "empty gap range: " + text;
            return std::nullopt;
        }
        for (uint64_t value = lo; value <= hi; ++value) {
            gaps.push_back(static_cast<uint32_t>(value));
        }
        return gaps;
    }
    for (const std::string& part : split(text, ',')) {
        uint64_t value = 0;
        if (!parse_uint(part, value) || value > UINT32_MAX) {
            error = "bad gap value: \"" + part + "\"";
            return std::nullopt;
        }
        gaps.push_back(static_cast<uint32_t>(value));
    }
    return gaps;
}

// A bare integer K means seeds 1..K; a comma list is taken verbatim
// (trailing comma allowed, so "7," is the single seed 7).
std::optional<std::vector<uint64_t>> parse_seed_list(const std::string& text,
                                                     std::string& error) {
    std::vector<uint64_t> seeds;
    if (text.find(',') == std::string::npos) {
        uint64_t count = 0;
        if (!parse_uint(text, count)) {
            error = "bad seed count: \"" + text + "\"";
            return std::nullopt;
        }
        if (count == 0) {
            error = "seed count must be at least 1";
            return std::nullopt;
        }
        for (uint64_t seed = 1; seed <= count; ++seed) seeds.push_back(seed);
        return seeds;
    }
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() > 1 && parts.back().empty()) parts.pop_back();
    for (const std::string& part : parts) {
        uint64_t value = 0;
        if (!parse_uint(part, value)) {
            error = "bad seed value: \"" + part + "\"";
            return std::nullopt;
        }
        seeds.push_back(value);
    }
    return seeds;
}

bool load_config(const std::string& path, FileConfig& file, std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot read config file: " + path;
        return false;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const std::exception& parse_error) {
        error = "config file " + path + ": " + parse_error.what();
        return false;
    }
    if (!doc.is_object()) {
        error = "config file " + path + ": root must be an object";
        return false;
    }
    static const std::set<std::string> known = {
        "n",      "lambda_e", "lambda_r", "lambda_u",    "lambda",
        "gap_values", "horizon",  "burn_in",  "seeds",       "mode",
        "format", "output_path", "jobs"};
    for (const auto& item : doc.items()) {
        if (!known.contains(item.key())) {
            error = "config file " + path + ": unknown key \"" + item.key() + "\"";
            return false;
        }
    }
    try {
        if (doc.contains("n")) file.n = doc["n"].get<uint32_t>();
        if (doc.contains("lambda_e")) file.lambda_e = doc["lambda_e"].get<double>();
        if (doc.contains("lambda_r")) file.lambda_r = doc["lambda_r"].get<double>();
        if (doc.contains("lambda_u")) file.lambda_u = doc["lambda_u"].get<double>();
        if (doc.contains("lambda")) file.lambda = doc["lambda"].get<double>();
        if (doc.contains("gap_values")) {
            file.gap_values = doc["gap_values"].get<std::vector<uint32_t>>();
        }
        if (doc.contains("horizon")) file.horizon = doc["horizon"].get<double>();
        if (doc.contains("burn_in")) file.burn_in = doc["burn_in"].get<double>();
        if (doc.contains("seeds")) {
            const auto& seeds = doc["seeds"];
            if (seeds.is_number_integer() || seeds.is_number_unsigned()) {
                const uint64_t count = seeds.get<uint64_t>();
                std::vector<uint64_t> expanded;
                for (uint64_t seed = 1; seed <= count; ++seed) expanded.push_back(seed);
                file.seeds = std::move(expanded);
            } else {
                file.seeds = seeds.get<std::vector<uint64_t>>();
            }
        }
        if (doc.contains("mode")) file.mode = doc["mode"].get<std::string>();
        if (doc.contains("format")) file.format = doc["format"].get<std::string>();
        if (doc.contains("output_path")) {
            file.output_path = doc["output_path"].get<std::string>();
        }
        if (doc.contains("jobs")) file.jobs = doc["jobs"].get<unsigned>();
    } catch (const std::exception& type_error) {
        error = "config file " + path + ": " + type_error.what();
        return false;
    }
    return true;
}

int fail(gossip_status status) {
    std::fprintf(stderr, "error: %s\n", gossip_last_error());
    return status == GOSSIP_ERR_INVALID_ARGUMENT ? 1 : 2;
}

struct ConfigDeleter {
    void operator()(gossip_sweep_config* config) const { gossip_sweep_config_free(config); }
};
struct ReportDeleter {
    void operator()(gossip_report* report) const { gossip_report_free(report); }
};

int execute(const Effective& effective) {
    gossip_sweep_config* raw_config = nullptr;
    gossip_status status = gossip_sweep_config_create(&raw_config);
    if (status != GOSSIP_OK) return fail(status);
    const std::unique_ptr<gossip_sweep_config, ConfigDeleter> config(raw_config);

    status = gossip_sweep_config_set_network(raw_config, effective.n, effective.lambda_e,
                                             effective.lambda_r, effective.lambda_u,
                                             effective.lambda);
    if (status != GOSSIP_OK) return fail(status);
    status = gossip_sweep_config_set_gaps(raw_config, effective.gaps.data(),
                                          effective.gaps.size());
    if (status != GOSSIP_OK) return fail(status);
    status = gossip_sweep_config_set_window(raw_config, effective.horizon,
                                            effective.burn_in);
    if (status != GOSSIP_OK) return fail(status);
    status = gossip_sweep_config_set_seeds(raw_config, effective.seeds.data(),
                                           effective.seeds.size());
    if (status != GOSSIP_OK) return fail(status);
    status = gossip_sweep_config_set_mode(raw_config, effective.mode.c_str());
    if (status != GOSSIP_OK) return fail(status);
    status = gossip_sweep_config_set_jobs(raw_config, effective.jobs);
    if (status != GOSSIP_OK) return fail(status);
    status = gossip_sweep_config_set_output_path(raw_config, effective.out.c_str());
    if (status != GOSSIP_OK) return fail(status);

    gossip_report* raw_report = nullptr;
    status = gossip_sweep_run(raw_config, &raw_report);
    if (status != GOSSIP_OK) return fail(status);
    const std::unique_ptr<gossip_report, ReportDeleter> report(raw_report);

    if (effective.out == "-") {
        char* text = nullptr;
        status = gossip_report_render(raw_report, effective.format.c_str(), &text);
        if (status != GOSSIP_OK) return fail(status);
        std::fputs(text, stdout);
        gossip_string_free(text);
        return 0;
    }
    status = gossip_report_write(raw_report, effective.format.c_str(),
                                 effective.out.c_str());
    if (status != GOSSIP_OK) return fail(status);
    return 0;
}

void add_network_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--n", raw.n, "number of nodes (default 50)");
    cmd->add_option("--lambda-e", raw.lambda_e, "event update rate (default 2)");
    cmd->add_option("--lambda-r", raw.lambda_r, "total reliable-source rate (default 1)");
    cmd->add_option("--lambda-u", raw.lambda_u, "total unreliable-source rate (default 5)");
    cmd->add_option("--lambda", raw.lambda, "per-node gossip rate (default 0.1)");
}

void add_output_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--format", raw.format, "output format, csv or json (default csv)");
    cmd->add_option("--out", raw.out, "output path, - for stdout (default -)");
    cmd->add_option("--config", raw.config, "JSON config file; flags override its values");
}

void add_window_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("--horizon", raw.horizon, "simulated time span (default 1e5)");
    cmd->add_option("--burn-in", raw.burn_in,
                    "measurement start time (default horizon/10)");
    cmd->add_option("--seeds", raw.seeds,
                    "comma list of seeds (\"7,\" for just seed 7) or a count K "
                    "meaning 1..K");
    cmd->add_option("--jobs", raw.jobs,
                    "simulator worker threads, 0 = all cores (default 0)");
}

}  // namespace

int main(int argc, char** argv) {
    RawOptions raw;
    CLI::App app{
        "Steady-state solver, Monte Carlo simulator and sweep harness for a "
        "gossip network fed by a reliable and an unreliable source"};
    app.require_subcommand(1);

    CLI::App* solve =
        app.add_subcommand("solve", "Exact long-run fraction and version age");
    add_network_options(solve, raw);
    add_output_options(solve, raw);
    solve->add_option("--gap", raw.gap, "reliability preference gap (default 0)");

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo estimates at a single gap");
    add_network_options(simulate, raw);
    add_output_options(simulate, raw);
    add_window_options(simulate, raw);
    simulate->add_option("--gap", raw.gap, "reliability preference gap (default 0)");

    CLI::App* sweep =
        app.add_subcommand("sweep", "Analytic/simulated sweep over gap values");
    add_network_options(sweep, raw);
    add_output_options(sweep, raw);
    add_window_options(sweep, raw);
    sweep->add_option("--gaps", raw.gaps,
                      "gap values, comma list or inclusive range a..b");
    sweep->add_option("--mode", raw.mode, "analytic, simulate or compare (default analytic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& parse_error) {
        if (parse_error.get_exit_code() == 0) return app.exit(parse_error);
        std::fprintf(stderr, "%s\n", parse_error.what());
        return 1;
    }

    FileConfig file;
    if (raw.config) {
        std::string error;
        if (!load_config(*raw.config, file, error)) {
            std::fprintf(stderr, "error: %s\n", error.c_str());
            return 1;
        }
    }

    Effective effective;
    effective.n = raw.n.value_or(file.n.value_or(effective.n));
    effective.lambda_e = raw.lambda_e.value_or(file.lambda_e.value_or(effective.lambda_e));
    effective.lambda_r = raw.lambda_r.value_or(file.lambda_r.value_or(effective.lambda_r));
    effective.lambda_u = raw.lambda_u.value_or(file.lambda_u.value_or(effective.lambda_u));
    effective.lambda = raw.lambda.value_or(file.lambda.value_or(effective.lambda));
    effective.horizon = raw.horizon.value_or(file.horizon.value_or(1e5));
    effective.burn_in =
        raw.burn_in ? *raw.burn_in
                    : (file.burn_in ? *file.burn_in : effective.horizon * 0.1);
    effective.format = raw.format.value_or(file.format.value_or("csv"));
    effective.out = raw.out.value_or(file.output_path.value_or("-"));
    effective.jobs = raw.jobs.value_or(file.jobs.value_or(0));

    if (effective.format != "csv" && effective.format != "json") {
        std::fprintf(stderr, "error: unknown format \"%s\" (expected csv or json)\n",
                     effective.format.c_str());
        return 1;
    }

    if (raw.seeds) {
        std::string error;
        const auto seeds = parse_seed_list(*raw.seeds, error);
        if (!seeds) {
            std::fprintf(stderr, "error: %s\n", error.c_str());
            return 1;
        }
        effective.seeds = *seeds;
    } else if (file.seeds) {
        effective.seeds = *file.seeds;
    }

    const bool single_gap = solve->parsed() || simulate->parsed();
    if (single_gap) {
        if (raw.gap) {
            effective.gaps = {*raw.gap};
        } else if (file.gap_values) {
            if (file.gap_values->size() != 1) {
                std::fprintf(stderr,
                             "error: config lists %zu gap values; this subcommand "
                             "takes a single --gap\n",
                             file.gap_values->size());
                return 1;
            }
            effective.gaps = *file.gap_values;
        } else {
            effective.gaps = {0};
        }
    } else {
        if (raw.gaps) {
            std::string error;
            const auto gaps = parse_gap_list(*raw.gaps, error);
            if (!gaps) {
                std::fprintf(stderr, "error: %s\n", error.c_str());
                return 1;
            }
            effective.gaps = *gaps;
        } else if (file.gap_values) {
            effective.gaps = *file.gap_values;
        } else {
            std::fprintf(stderr, "error: no gap values given (--gaps or config gap_values)\n");
            return 1;
        }
    }

    if (solve->parsed()) {
        effective.mode = "analytic";
    } else if (simulate->parsed()) {
        effective.mode = "simulate";
        if (effective.seeds.empty()) effective.seeds = {1};
    } else {
        effective.mode = raw.mode.value_or(file.mode.value_or("analytic"));
    }

    return execute(effective);
}
