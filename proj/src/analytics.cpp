#include "gossip/analytics.hpp"

#include <stdexcept>
#include <string>

namespace gossip {

namespace {

void require_shape(const Table& table, size_t rows, size_t cols, const char* name) {
    if (table.size() != rows) {
        throw std::invalid_argument(std::string(name) + " table has " +
                                    std::to_string(table.size()) + " rows, expected " +
                                    std::to_string(rows));
    }
    for (const auto& row : table) {
        if (row.size() != cols) {
            throw std::invalid_argument(std::string(name) + " table row has " +
                                        std::to_string(row.size()) + " columns, expected " +
                                        std::to_string(cols));
        }
    }
}

// Total outflow rate while the age deficit persists: source event, reliable
// delivery into the set, or gossip from the set's complement.
double deficit_outflow(const Params& params, const RateTerms& rates) {
    return params.lambda_e + rates.source_reliable + rates.gossip;
}

// Total rate of anything that can change a k-set's packet class.
double class_outflow(const RateTerms& rates) {
    return rates.source_unreliable + rates.source_reliable + rates.gossip;
}

}  // namespace

RateTerms rate_terms(const Params& params, uint32_t k) {
    params.validate();
    if (k < 1 || k > params.n) {
        throw std::invalid_argument("set size k=" + std::to_string(k) +
                                    " outside 1..n for n=" + std::to_string(params.n));
    }
    const double n = params.n;
    RateTerms rates;
    rates.source_reliable = k * params.lambda_r / n;
    rates.source_unreliable = k * params.lambda_u / n;
    // k = n leaves no outside node to gossip in; n = 1 has no pairs at all.
    rates.gossip = params.n >= 2 ? k * (n - k) * params.lambda_gossip / (n - 1) : 0.0;
    return rates;
}

Table solve_c(const Params& params) {
    params.validate();
    const uint32_t n = params.n;
    Table c(n, std::vector<double>(params.gap, 0.0));
    // k descending: row k pulls from row k+1 in the same column. g ascending:
    // column g pulls from column g-1, with the g = -1 boundary equal to zero.
    for (uint32_t k = n; k >= 1; --k) {
        const RateTerms rates = rate_terms(params, k);
        const double total = deficit_outflow(params, rates);
        for (uint32_t g = 0; g < params.gap; ++g) {
            const double aged = g == 0 ? 0.0 : c[k - 1][g - 1];
            const double grown = k == n ? 0.0 : c[k][g];
            c[k - 1][g] =
                (aged * params.lambda_e + rates.source_reliable + grown * rates.gossip) / total;
        }
    }
    return c;
}

std::vector<double> solve_b(const Params& params, const Table& c) {
    params.validate();
    require_shape(c, params.n, params.gap, "c");
    const uint32_t n = params.n;
    std::vector<double> b(n, 0.0);
    for (uint32_t k = n; k >= 1; --k) {
        const RateTerms rates = rate_terms(params, k);
        const double total = deficit_outflow(params, rates);
        const double at_boundary = params.gap == 0 ? 0.0 : c[k - 1][params.gap - 1];
        const double grown = k == n ? 0.0 : b[k];
        b[k - 1] = ((1.0 - at_boundary) * params.lambda_e + grown * rates.gossip) / total;
    }
    return b;
}

std::vector<double> solve_a(const Params& params, const std::vector<double>& b) {
    params.validate();
    if (b.size() != params.n) {
        throw std::invalid_argument("b vector has " + std::to_string(b.size()) +
                                    " entries, expected " + std::to_string(params.n));
    }
    const uint32_t n = params.n;
    std::vector<double> a(n, 0.0);
    for (uint32_t k = n; k >= 1; --k) {
        const RateTerms rates = rate_terms(params, k);
        const double grown = k == n ? 0.0 : a[k];
        a[k - 1] = (b[k - 1] * rates.source_unreliable + grown * rates.gossip) /
                   class_outflow(rates);
    }
    return a;
}

Table solve_d(const Params& params, const Table& c) {
    params.validate();
    require_shape(c, params.n, params.gap, "c");
    const uint32_t n = params.n;
    // Column g = 0 is identically zero: no age accrues before the first event.
    Table d(n, std::vector<double>(params.gap + 1, 0.0));
    for (uint32_t k = n; k >= 1; --k) {
        const RateTerms rates = rate_terms(params, k);
        const double total = deficit_outflow(params, rates);
        for (uint32_t g = 1; g <= params.gap; ++g) {
            const double aged = d[k - 1][g - 1] + c[k - 1][g - 1];
            const double grown = k == n ? 0.0 : d[k][g];
            d[k - 1][g] = (aged * params.lambda_e + grown * rates.gossip) / total;
        }
    }
    return d;
}

std::vector<double> solve_e(const Params& params, const Table& d) {
    params.validate();
    require_shape(d, params.n, params.gap + 1, "d");
    const uint32_t n = params.n;
    std::vector<double> e(n, 0.0);
    for (uint32_t k = n; k >= 1; --k) {
        const RateTerms rates = rate_terms(params, k);
        const double grown = k == n ? 0.0 : e[k];
        e[k - 1] = (params.lambda_e + d[k - 1][params.gap] * rates.source_unreliable +
                    grown * rates.gossip) /
                   class_outflow(rates);
    }
    return e;
}

AnalyticResult solve(const Params& params) {
    params.validate();
    AnalyticResult result;
    result.tables.c = solve_c(params);
    result.tables.b = solve_b(params, result.tables.c);
    result.tables.a = solve_a(params, result.tables.b);
    result.tables.d = solve_d(params, result.tables.c);
    result.tables.e = solve_e(params, result.tables.d);
    result.fraction_unreliable = result.tables.a.front();
    result.version_age = result.tables.e.front();
    return result;
}

double limit_age_gap_zero(const Params& params) {
    params.validate();
    // With no preference gap both sources refresh a node, so the age chain
    // collapses to one recurrence over the pooled delivery rate.
    double grown = 0.0;
    for (uint32_t k = params.n; k >= 1; --k) {
        const RateTerms rates = rate_terms(params, k);
        grown = (params.lambda_e + grown * rates.gossip) /
                (rates.source_unreliable + rates.source_reliable + rates.gossip);
    }
    return grown;
}

double limit_age_gap_infinite(const Params& params) {
    params.validate();
    // An unbounded gap means unreliable packets never displace anything, so
    // only reliable deliveries and gossip reduce age.
    double grown = 0.0;
    for (uint32_t k = params.n; k >= 1; --k) {
        const RateTerms rates = rate_terms(params, k);
        grown = (params.lambda_e + grown * rates.gossip) /
                (rates.source_reliable + rates.gossip);
    }
    return grown;
}

}  // namespace gossip
