#include "gossip/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gossip/analytics.hpp"
#include "gossip/simulator.hpp"

namespace gossip {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::analytic: return "analytic";
        case Mode::simulate: return "simulate";
        case Mode::compare: return "compare";
    }
    return "analytic";
}

std::optional<Mode> mode_from_string(std::string_view text) {
    if (text == "analytic") return Mode::analytic;
    if (text == "simulate") return Mode::simulate;
    if (text == "compare") return Mode::compare;
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    params.validate();
    if (gap_values.empty()) {
        throw std::invalid_argument("gap_values must be non-empty");
    }
    for (size_t i = 1; i < gap_values.size(); ++i) {
        if (gap_values[i] <= gap_values[i - 1]) {
            throw std::invalid_argument("gap_values must be strictly increasing");
        }
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw std::invalid_argument("horizon must be positive and finite");
    }
    if (!(burn_in >= 0.0) || burn_in >= horizon) {
        throw std::invalid_argument("burn-in must lie in [0, horizon)");
    }
    if (mode != Mode::analytic && seeds.empty()) {
        throw std::invalid_argument("seeds must be non-empty outside analytic mode");
    }
}

namespace {

struct SampleStats {
    double mean = 0.0;
    double se = 0.0;
};

SampleStats stats(const std::vector<double>& samples) {
    SampleStats out;
    const size_t m = samples.size();
    double sum = 0.0;
    for (double sample : samples) sum += sample;
    out.mean = sum / static_cast<double>(m);
    if (m < 2) return out;  // a single run has no spread estimate
    double squares = 0.0;
    for (double sample : samples) {
        const double delta = sample - out.mean;
        squares += delta * delta;
    }
    out.se = std::sqrt(squares / static_cast<double>(m - 1)) /
             std::sqrt(static_cast<double>(m));
    return out;
}

void fill_errors(double analytic, double simulated, std::optional<double>& rel,
                 std::optional<double>& abs) {
    const double diff = std::abs(simulated - analytic);
    if (analytic != 0.0) {
        rel = diff / std::abs(analytic);
    } else {
        abs = diff;
    }
}

}  // namespace

ComparisonReport sweep(const ExperimentConfig& config) {
    config.validate();

    ComparisonReport report;
    report.config = config;
    report.rows.resize(config.gap_values.size());

    for (size_t i = 0; i < config.gap_values.size(); ++i) {
        Params point = config.params;
        point.gap = config.gap_values[i];
        const AnalyticResult exact = solve(point);
        ComparisonRow& row = report.rows[i];
        row.gap = point.gap;
        row.analytic_fraction = exact.fraction_unreliable;
        row.analytic_age = exact.version_age;
    }
    if (config.mode == Mode::analytic) {
        return report;
    }

    const size_t n_seeds = config.seeds.size();
    const size_t n_tasks = config.gap_values.size() * n_seeds;
    std::vector<Estimates> estimates(n_tasks);

    // Tasks are pulled from a shared cursor but land in fixed (gap, seed)
    // slots, so the aggregation below never depends on scheduling.
    std::atomic<size_t> cursor{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        while (true) {
            const size_t task = cursor.fetch_add(1);
            if (task >= n_tasks) return;
            const size_t gap_index = task / n_seeds;
            const size_t seed_index = task % n_seeds;
            Params point = config.params;
            point.gap = config.gap_values[gap_index];
            try {
                estimates[task] =
                    run(point, config.horizon, config.burn_in, config.seeds[seed_index]);
            } catch (const std::exception& error) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::make_exception_ptr(std::runtime_error(
                        "simulation failed at gap=" + std::to_string(point.gap) +
                        ", seed=" + std::to_string(config.seeds[seed_index]) + ": " +
                        error.what()));
                }
                cursor.store(n_tasks);  // stop handing out work
                return;
            }
        }
    };

    unsigned jobs = config.jobs == 0 ? std::thread::hardware_concurrency() : config.jobs;
    if (jobs == 0) jobs = 1;
    jobs = static_cast<unsigned>(std::min<size_t>(jobs, n_tasks));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<double> fractions(n_seeds);
    std::vector<double> ages(n_seeds);
    for (size_t i = 0; i < config.gap_values.size(); ++i) {
        for (size_t s = 0; s < n_seeds; ++s) {
            fractions[s] = estimates[i * n_seeds + s].fraction_unreliable;
            ages[s] = estimates[i * n_seeds + s].version_age;
        }
        const SampleStats fraction = stats(fractions);
        const SampleStats age = stats(ages);
        ComparisonRow& row = report.rows[i];
        row.sim_fraction_mean = fraction.mean;
        row.sim_fraction_se = fraction.se;
        row.sim_age_mean = age.mean;
        row.sim_age_se = age.se;
        row.n_seeds = n_seeds;
        if (config.mode == Mode::compare) {
            fill_errors(row.analytic_fraction, fraction.mean, row.rel_err_fraction,
                        row.abs_err_fraction);
            fill_errors(row.analytic_age, age.mean, row.rel_err_age, row.abs_err_age);
        }
    }
    return report;
}

}  // namespace gossip
