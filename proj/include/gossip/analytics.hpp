#pragma once

#include <cstdint>
#include <vector>

#include "gossip/params.hpp"

namespace gossip {

/// Row-per-set-size table; row k-1 holds the values for sets of k nodes.
using Table = std::vector<std::vector<double>>;

/** The three rate terms shared by every steady-state recurrence, for a set
 *  of k out of n nodes. */
struct RateTerms {
    double source_reliable;    ///< k * lambda_r / n
    double source_unreliable;  ///< k * lambda_u / n
    double gossip;             ///< k * (n-k) * lambda_gossip / (n-1); zero at k = n
};

RateTerms rate_terms(const Params& params, std::uint32_t k);

/** Solved steady-state tables. Vectors are indexed k-1 for k in 1..n. */
struct AnalyticTables {
    /// Probability that the freshest reliable packet of a k-node set lags by
    /// at most g versions; columns g in 0..gap-1 (no columns when gap = 0).
    Table c;
    /// Expected set age restricted to states where the freshest reliable
    /// packet lags by at most g versions; columns g in 0..gap.
    Table d;
    /// Probability that a k-node set joined with the unreliable source is
    /// represented by an unreliable packet.
    std::vector<double> b;
    /// Probability that a k-node set is represented by an unreliable packet.
    std::vector<double> a;
    /// Expected version age of a k-node set.
    std::vector<double> e;
};

struct AnalyticResult {
    double fraction_unreliable = 0.0;  ///< long-run expected fraction of nodes on unreliable packets
    double version_age = 0.0;          ///< long-run expected version age at any one node
    AnalyticTables tables;
};

Table solve_c(const Params& params);
std::vector<double> solve_b(const Params& params, const Table& c);
std::vector<double> solve_a(const Params& params, const std::vector<double>& b);
Table solve_d(const Params& params, const Table& c);
std::vector<double> solve_e(const Params& params, const Table& d);

/** Full evaluation: tables plus the two node-level quantities. */
AnalyticResult solve(const Params& params);

/** Node version age in the gap = 0 regime, where both sources act as one
 *  combined source of rate lambda_r + lambda_u. */
double limit_age_gap_zero(const Params& params);

/** Node version age in the gap -> infinity regime, where unreliable packets
 *  are always rejected. lambda_u has no effect here. */
double limit_age_gap_infinite(const Params& params);

}  // namespace gossip
