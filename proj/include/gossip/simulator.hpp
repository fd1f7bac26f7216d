#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gossip/packet.hpp"
#include "gossip/params.hpp"
#include "gossip/random.hpp"

namespace gossip {

/** Complete network state between transitions. */
struct NetworkState {
    std::vector<PacketState> nodes;
    double clock = 0.0;             ///< simulated time, non-decreasing
    std::uint64_t event_count = 0;  ///< versions published since the start

    /// All nodes holding a reliable packet at age 0.
    static NetworkState fresh(std::uint32_t n);
};

struct Transition {
    enum class Kind : std::uint8_t {
        event_update,        ///< the tracked process publishes a new version
        reliable_to_node,    ///< reliable source updates `target`
        unreliable_to_node,  ///< unreliable source updates `target`
        gossip,              ///< node `source` forwards its packet to `target`
    };

    Kind kind = Kind::event_update;
    std::uint32_t source = 0;  ///< gossip only
    std::uint32_t target = 0;  ///< unused for event_update
};

/** Time-averaged measurements of one run over (burn_in, horizon]. */
struct Estimates {
    double fraction_unreliable = 0.0;
    double version_age = 0.0;
    double horizon = 0.0;
    double burn_in = 0.0;
    std::uint64_t seed = 0;
    /// Sum of the dwell slices that were actually measured; equals
    /// horizon - burn_in up to floating-point accumulation.
    double measured_time = 0.0;
};

/** Draws the next dwell time and transition.
 *
 * One aggregated exponential clock at the total rate, then a categorical
 * pick proportional to (lambda_e, lambda_r, lambda_u, n * lambda_gossip),
 * then uniform node choices within the category. Distribution-identical to
 * running every per-link Poisson process separately. With n = 1 the gossip
 * category has zero rate and is never drawn.
 */
std::pair<double, Transition> sample_transition(const Params& params, Rng& rng);

/** Applies one transition in place.
 *
 * Event updates age every packet by one version. A reliable-source update
 * unconditionally installs a fresh reliable packet. An unreliable-source
 * update and a gossip delivery both go through merge(): in particular a
 * reliable holder keeps its packet against an incoming age-0 unreliable one
 * only while its own age is at most `gap`.
 *
 * Throws std::out_of_range for node indices outside the state and
 * std::invalid_argument for a self-gossip transition.
 */
void apply(NetworkState& state, const Transition& transition, const Params& params);

/** Runs one simulation from the all-reliable initial state until `horizon`,
 *  accumulating the piecewise-constant time integrals of the unreliable
 *  fraction and of the node-averaged age over (burn_in, horizon].
 *  Deterministic for a fixed (params, horizon, burn_in, seed). */
Estimates run(const Params& params, double horizon, double burn_in, std::uint64_t seed);

}  // namespace gossip
