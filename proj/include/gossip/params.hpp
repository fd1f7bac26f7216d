#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gossip {

/** Model parameters for a two-source age-based gossip network.
 *
 * Rates are totals: each source spreads its rate uniformly over the n
 * nodes and each node spreads its gossip rate uniformly over its n-1
 * peers. Per-link rates are derived where needed, never stored.
 */
struct Params {
    std::uint32_t n = 50;        ///< number of user nodes
    double lambda_e = 2.0;       ///< event (version) update rate
    double lambda_r = 1.0;       ///< total reliable-source update rate
    double lambda_u = 5.0;       ///< total unreliable-source update rate
    double lambda_gossip = 0.1;  ///< total per-node gossip rate
    std::uint32_t gap = 0;       ///< versions a node will sacrifice to keep a reliable packet

    void validate() const;

    friend bool operator==(const Params&, const Params&) = default;
};

inline void Params::validate() const {
    if (n < 1)
        throw std::invalid_argument("params: n must be >= 1");
    if (!std::isfinite(lambda_e) || !(lambda_e > 0.0))
        throw std::invalid_argument("params: lambda_e must be finite and > 0");
    if (!std::isfinite(lambda_r) || !(lambda_r > 0.0))
        throw std::invalid_argument("params: lambda_r must be finite and > 0");
    if (!std::isfinite(lambda_u) || !(lambda_u >= 0.0))
        throw std::invalid_argument("params: lambda_u must be finite and >= 0");
    if (!std::isfinite(lambda_gossip) || !(lambda_gossip >= 0.0))
        throw std::invalid_argument("params: lambda must be finite and >= 0");
}

}  // namespace gossip
