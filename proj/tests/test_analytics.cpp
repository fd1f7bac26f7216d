#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gossip/analytics.hpp"
#include "support/residuals.hpp"

using gossip::AnalyticResult;
using gossip::limit_age_gap_infinite;
using gossip::limit_age_gap_zero;
using gossip::Params;
using gossip::rate_terms;
using gossip::RateTerms;
using gossip::solve;
using gossip::solve_b;
using gossip::solve_c;
using gossip::solve_d;
using gossip::solve_e;
using gossip::Table;

namespace {

Params reference_rates(std::uint32_t n, std::uint32_t gap) {
    Params params;  // defaults carry the reference rates
    params.n = n;
    params.gap = gap;
    return params;
}

constexpr double kExact = 1e-15;

bool near(double actual, double expected, double tolerance) {
    return std::abs(actual - expected) <= tolerance;
}

}  // namespace

TEST_CASE("rate terms split source and gossip flows") {
    const RateTerms full = rate_terms(reference_rates(50, 0), 50);
    CHECK(full.source_reliable == 1.0);
    CHECK(full.source_unreliable == 5.0);
    CHECK(full.gossip == 0.0);  // the full set has nobody left to hear from

    const RateTerms half = rate_terms(reference_rates(2, 0), 1);
    CHECK(half.source_reliable == 0.5);
    CHECK(half.source_unreliable == 2.5);
    CHECK(near(half.gossip, 0.1, kExact));

    const RateTerms lone = rate_terms(reference_rates(1, 0), 1);
    CHECK(lone.source_reliable == 1.0);
    CHECK(lone.source_unreliable == 5.0);
    CHECK(lone.gossip == 0.0);

    CHECK_THROWS_AS(rate_terms(reference_rates(10, 0), 0), std::invalid_argument);
    CHECK_THROWS_AS(rate_terms(reference_rates(10, 0), 11), std::invalid_argument);
}

TEST_CASE("table seeds match their closed forms") {
    for (const std::uint32_t n : {1u, 5u, 50u}) {
        CAPTURE(n);
        const Params params = reference_rates(n, 2);
        const Table c = solve_c(params);
        CHECK(near(c[n - 1][0], 1.0 / 3.0, kExact));  // lambda_r/(lambda_e+lambda_r)
        CHECK(near(c[n - 1][1], 5.0 / 9.0, kExact));
        const Table d = solve_d(params, c);
        CHECK(d[n - 1][0] == 0.0);
        CHECK(near(d[n - 1][1], 2.0 / 9.0, kExact));

        const Params flat = reference_rates(n, 0);
        const Table c0 = solve_c(flat);
        REQUIRE(c0.size() == n);
        for (const auto& row : c0) CHECK(row.empty());
        const std::vector<double> b0 = solve_b(flat, c0);
        CHECK(near(b0[n - 1], 2.0 / 3.0, kExact));
        const Table d0 = solve_d(flat, c0);
        for (const auto& row : d0) {
            REQUIRE(row.size() == 1);
            CHECK(row[0] == 0.0);
        }
        const std::vector<double> e0 = solve_e(flat, d0);
        CHECK(near(e0[n - 1], 1.0 / 3.0, kExact));
    }
}

TEST_CASE("a single node solves in closed form") {
    const Params params = reference_rates(1, 0);
    const AnalyticResult result = solve(params);
    CHECK(near(result.fraction_unreliable, 5.0 / 9.0, kExact));
    CHECK(near(result.version_age, 1.0 / 3.0, kExact));
    CHECK(near(limit_age_gap_zero(params), 1.0 / 3.0, kExact));
    CHECK(near(limit_age_gap_infinite(params), 2.0, kExact));  // lambda_e/lambda_r
}

TEST_CASE("no unreliable source means no unreliable packets") {
    Params params = reference_rates(10, 7);
    params.lambda_u = 0.0;
    const AnalyticResult result = solve(params);
    CHECK(result.fraction_unreliable == 0.0);
    for (const double a_k : result.tables.a) CHECK(a_k == 0.0);
    // With nothing to reject, the age chain is the reject-everything limit.
    CHECK(near(result.version_age, limit_age_gap_infinite(params), kExact));
}

TEST_CASE("gap 0 age equals the pooled-source recursion") {
    for (const std::uint32_t n : {1u, 2u, 10u, 50u}) {
        CAPTURE(n);
        const Params params = reference_rates(n, 0);
        CHECK(near(solve(params).version_age, limit_age_gap_zero(params), 1e-12));
    }
}

TEST_CASE("scaling every rate together changes nothing") {
    const Params params = reference_rates(10, 4);
    const AnalyticResult base = solve(params);
    Params scaled = params;
    scaled.lambda_e *= 3.7;
    scaled.lambda_r *= 3.7;
    scaled.lambda_u *= 3.7;
    scaled.lambda_gossip *= 3.7;
    const AnalyticResult same = solve(scaled);
    CHECK(near(same.fraction_unreliable, base.fraction_unreliable, 1e-13));
    CHECK(near(same.version_age, base.version_age, 1e-12));
}

TEST_CASE("a large gap starves the unreliable source") {
    const Params params = reference_rates(10, 200);
    const AnalyticResult result = solve(params);
    CHECK(result.fraction_unreliable < 1e-3);
    const double endpoint = limit_age_gap_infinite(params);
    CHECK(std::abs(result.version_age - endpoint) / endpoint < 1e-3);
    // Cross-implementation regression against an independent solver.
    CHECK(result.fraction_unreliable ==
          doctest::Approx(7.266096641686797e-9).epsilon(1e-9));
    CHECK(result.version_age == doctest::Approx(13.99051530295883).epsilon(1e-12));
}

TEST_CASE("frozen endpoints of the reference sweep") {
    const AnalyticResult tight = solve(reference_rates(50, 0));
    CHECK(tight.fraction_unreliable == doctest::Approx(0.8178523812733034).epsilon(1e-12));
    CHECK(tight.version_age == doctest::Approx(12.138169354199736).epsilon(1e-12));
    const AnalyticResult loose = solve(reference_rates(50, 30));
    CHECK(loose.fraction_unreliable == doctest::Approx(0.32793958977159693).epsilon(1e-12));
    CHECK(loose.version_age == doctest::Approx(19.548923280343217).epsilon(1e-12));
}

TEST_CASE("the gap trades reliability against freshness") {
    double previous_fraction = 2.0;
    double previous_age = -1.0;
    for (std::uint32_t gap = 0; gap <= 30; ++gap) {
        const AnalyticResult result = solve(reference_rates(50, gap));
        CAPTURE(gap);
        CHECK(result.fraction_unreliable < previous_fraction - 1e-12);
        CHECK(result.version_age > previous_age + 1e-12);
        previous_fraction = result.fraction_unreliable;
        previous_age = result.version_age;
    }
}

TEST_CASE("every table moves strictly with the gap") {
    const std::uint32_t n = 10;
    std::vector<double> previous_b;
    double previous_a1 = 2.0;
    double previous_e1 = -1.0;
    for (std::uint32_t gap = 0; gap <= 40; ++gap) {
        const AnalyticResult result = solve(reference_rates(n, gap));
        CAPTURE(gap);
        if (!previous_b.empty()) {
            for (std::uint32_t k = 1; k <= n; ++k) {
                CHECK(result.tables.b[k - 1] < previous_b[k - 1] - 1e-12);
            }
            CHECK(result.tables.a.front() < previous_a1 - 1e-12);
            CHECK(result.tables.e.front() > previous_e1 + 1e-12);
        }
        previous_b = result.tables.b;
        previous_a1 = result.tables.a.front();
        previous_e1 = result.tables.e.front();
    }

    // Within one solve, c and d rise strictly along g.
    const AnalyticResult deep = solve(reference_rates(n, 40));
    for (std::uint32_t k = 1; k <= n; ++k) {
        for (std::uint32_t g = 1; g < 40; ++g) {
            CHECK(deep.tables.c[k - 1][g] > deep.tables.c[k - 1][g - 1] + 1e-12);
        }
        for (std::uint32_t g = 1; g <= 40; ++g) {
            CHECK(deep.tables.d[k - 1][g] > deep.tables.d[k - 1][g - 1] + 1e-12);
        }
    }
}

TEST_CASE("probabilities stay in range and ages stay bracketed") {
    for (const auto& [n, gap] : {std::pair<std::uint32_t, std::uint32_t>{1, 0},
                                 {2, 3},
                                 {7, 9},
                                 {50, 17}}) {
        CAPTURE(n);
        CAPTURE(gap);
        const Params params = reference_rates(n, gap);
        const AnalyticResult result = solve(params);
        for (const auto& row : result.tables.c) {
            for (const double value : row) {
                CHECK(value >= 0.0);
                CHECK(value <= 1.0);
            }
        }
        for (const double value : result.tables.b) {
            CHECK(value >= 0.0);
            CHECK(value <= 1.0);
        }
        for (const double value : result.tables.a) {
            CHECK(value >= 0.0);
            CHECK(value <= 1.0);
        }
        for (const auto& row : result.tables.d) {
            for (const double value : row) CHECK(value >= 0.0);
        }
        for (const double value : result.tables.e) CHECK(value >= 0.0);

        CHECK(limit_age_gap_zero(params) <= result.version_age + 1e-12);
        CHECK(result.version_age <= limit_age_gap_infinite(params) + 1e-12);
    }
}

TEST_CASE("solved tables satisfy their balance equations") {
    for (const auto& [n, gap] : {std::pair<std::uint32_t, std::uint32_t>{1, 0},
                                 {10, 5},
                                 {50, 20}}) {
        CAPTURE(n);
        CAPTURE(gap);
        const Params params = reference_rates(n, gap);
        const AnalyticResult result = solve(params);
        CHECK(testsupport::max_residual(params, result.tables) <= 1e-10);
    }
}

TEST_CASE("invalid parameters and table shapes are rejected") {
    Params params;

    params.n = 0;
    CHECK_THROWS_AS(solve(params), std::invalid_argument);
    params = {};
    params.lambda_e = 0.0;
    CHECK_THROWS_AS(solve(params), std::invalid_argument);
    params = {};
    params.lambda_r = -1.0;
    CHECK_THROWS_AS(solve(params), std::invalid_argument);
    params = {};
    params.lambda_u = -0.1;
    CHECK_THROWS_AS(solve(params), std::invalid_argument);
    params = {};
    params.lambda_gossip = -1.0;
    CHECK_THROWS_AS(solve(params), std::invalid_argument);
    params = {};
    params.lambda_e = std::nan("");
    CHECK_THROWS_AS(solve(params), std::invalid_argument);

    const Params good = reference_rates(4, 2);
    const Table c = solve_c(good);
    CHECK_THROWS_AS(solve_b(reference_rates(5, 2), c), std::invalid_argument);
    CHECK_THROWS_AS(solve_b(reference_rates(4, 3), c), std::invalid_argument);
    const Table d = solve_d(good, c);
    CHECK_THROWS_AS(solve_e(reference_rates(4, 3), d), std::invalid_argument);
    CHECK_THROWS_AS(solve_a(good, std::vector<double>(3, 0.0)), std::invalid_argument);
}
