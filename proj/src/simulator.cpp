#include "gossip/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gossip {

NetworkState NetworkState::fresh(uint32_t n) {
    NetworkState state;
    state.nodes.assign(n, PacketState{Reliability::reliable, 0});
    return state;
}

std::pair<double, Transition> sample_transition(const Params& params, Rng& rng) {
    params.validate();
    const uint32_t n = params.n;
    // Gossip needs a distinct peer, so a single node contributes no rate.
    const double gossip_total = n >= 2 ? n * params.lambda_gossip : 0.0;
    const double total =
        params.lambda_e + params.lambda_r + params.lambda_u + gossip_total;

    const double wait = exponential(rng, total);
    const double pick = uniform01(rng) * total;
    // Draw order (wait, category, then indices) is part of the seed contract.

    Transition transition;
    if (pick < params.lambda_e) {
        transition.kind = Transition::Kind::event_update;
    } else if (pick < params.lambda_e + params.lambda_r) {
        transition.kind = Transition::Kind::reliable_to_node;
        transition.target = uniform_index(rng, n);
    } else if (pick < params.lambda_e + params.lambda_r + params.lambda_u) {
        transition.kind = Transition::Kind::unreliable_to_node;
        transition.target = uniform_index(rng, n);
    } else if (gossip_total > 0.0) {
        transition.kind = Transition::Kind::gossip;
        transition.source = uniform_index(rng, n);
        const uint32_t peer = uniform_index(rng, n - 1);
        transition.target = peer >= transition.source ? peer + 1 : peer;
    } else {
        // pick can round up to the total rate; fold the sliver into the one
        // category guaranteed to have positive rate.
        transition.kind = Transition::Kind::event_update;
    }
    return {wait, transition};
}

void apply(NetworkState& state, const Transition& transition, const Params& params) {
    params.validate();
    const size_t n = state.nodes.size();
    switch (transition.kind) {
        case Transition::Kind::event_update:
            for (PacketState& node : state.nodes) {
                node.age += 1;
            }
            break;
        case Transition::Kind::reliable_to_node: {
            if (transition.target >= n) {
                throw std::out_of_range("target " + std::to_string(transition.target) +
                                        " outside network of " + std::to_string(n));
            }
            // A fresh reliable packet wins every comparison, so skip the merge.
            state.nodes[transition.target] = PacketState{Reliability::reliable, 0};
            break;
        }
        case Transition::Kind::unreliable_to_node: {
            if (transition.target >= n) {
                throw std::out_of_range("target " + std::to_string(transition.target) +
                                        " outside network of " + std::to_string(n));
            }
            PacketState& node = state.nodes[transition.target];
            node = merge(node, PacketState{Reliability::unreliable, 0}, params.gap);
            break;
        }
        case Transition::Kind::gossip: {
            if (transition.source >= n || transition.target >= n) {
                throw std::out_of_range("gossip pair (" + std::to_string(transition.source) +
                                        ", " + std::to_string(transition.target) +
                                        ") outside network of " + std::to_string(n));
            }
            if (transition.source == transition.target) {
                throw std::invalid_argument("gossip requires distinct nodes");
            }
            PacketState& node = state.nodes[transition.target];
            node = merge(node, state.nodes[transition.source], params.gap);
            break;
        }
    }
    state.event_count += 1;
}

Estimates run(const Params& params, double horizon, double burn_in, uint64_t seed) {
    params.validate();
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw std::invalid_argument("horizon must be positive and finite");
    }
    if (!(burn_in >= 0.0) || burn_in >= horizon) {
        throw std::invalid_argument("burn-in must lie in [0, horizon)");
    }

    const uint32_t n = params.n;
    NetworkState state = NetworkState::fresh(n);
    Rng rng(seed);

    // Running totals over the current state; updated in step with apply so a
    // window contribution is O(1) regardless of n.
    uint64_t unreliable_count = 0;
    uint64_t age_sum = 0;

    double weighted_unreliable = 0.0;
    double weighted_age = 0.0;
    double measured = 0.0;

    while (state.clock < horizon) {
        auto [wait, transition] = sample_transition(params, rng);
        const double next = state.clock + wait;

        const double lo = std::max(state.clock, burn_in);
        const double hi = std::min(next, horizon);
        if (hi > lo) {
            const double width = hi - lo;
            weighted_unreliable += static_cast<double>(unreliable_count) * width;
            weighted_age += static_cast<double>(age_sum) * width;
            measured += width;
        }
        if (next >= horizon) {
            state.clock = horizon;
            break;
        }

        switch (transition.kind) {
            case Transition::Kind::event_update:
                age_sum += n;
                break;
            case Transition::Kind::reliable_to_node:
            case Transition::Kind::unreliable_to_node:
            case Transition::Kind::gossip: {
                const PacketState before = state.nodes[transition.target];
                apply(state, transition, params);
                const PacketState after = state.nodes[transition.target];
                age_sum += after.age;
                age_sum -= before.age;
                if (before.reliability != after.reliability) {
                    unreliable_count +=
                        after.reliability == Reliability::unreliable ? 1 : -1;
                }
                state.clock = next;
                continue;
            }
        }
        apply(state, transition, params);
        state.clock = next;
    }

    const double window = horizon - burn_in;
    Estimates estimates;
    estimates.fraction_unreliable =
        std::clamp(weighted_unreliable / (static_cast<double>(n) * window), 0.0, 1.0);
    estimates.version_age = weighted_age / (static_cast<double>(n) * window);
    estimates.horizon = horizon;
    estimates.burn_in = burn_in;
    estimates.seed = seed;
    estimates.measured_time = measured;
    return estimates;
}

}  // namespace gossip
