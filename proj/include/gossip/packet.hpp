#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace gossip {

enum class Reliability : std::uint8_t {
    reliable = 0,
    unreliable = 1,
};

/** One held update packet: its source class and how many versions it lags the event. */
struct PacketState {
    Reliability reliability = Reliability::reliable;
    std::uint64_t age = 0;

    friend bool operator==(const PacketState&, const PacketState&) = default;
};

/** Best packet of a node set. An empty set holds no packet (its age is infinite,
 *  its reliability undefined), so the summary is simply empty rather than defaulted. */
struct SetSummary {
    std::optional<PacketState> best;

    bool empty() const { return !best.has_value(); }

    friend bool operator==(const SetSummary&, const SetSummary&) = default;
};

/// True when a reliable packet of age `rel_age` is preferred over an unreliable
/// one of age `unrel_age`, i.e. rel_age <= unrel_age + gap. Phrased without the
/// addition so extreme ages cannot overflow.
constexpr bool reliable_preferred(std::uint64_t rel_age, std::uint64_t unrel_age,
                                  std::uint32_t gap) {
    return rel_age <= gap || rel_age - gap <= unrel_age;
}

/** Packet a node retains when `incoming` arrives while it holds `own`.
 *
 * Same source class: the younger packet wins, ties keep own. Across classes
 * the reliable packet wins exactly when it is at most `gap` versions older
 * than the unreliable one.
 */
constexpr PacketState merge(const PacketState& own, const PacketState& incoming,
                            std::uint32_t gap) {
    if (own.reliability == incoming.reliability)
        return incoming.age < own.age ? incoming : own;
    const PacketState& rel = own.reliability == Reliability::reliable ? own : incoming;
    const PacketState& unrel = own.reliability == Reliability::reliable ? incoming : own;
    return reliable_preferred(rel.age, unrel.age, gap) ? rel : unrel;
}

/** Reliability and age of the best packet among `packets` under the gap preference.
 *
 * The freshest reliable packet represents the set while it is at most `gap`
 * versions older than the freshest unreliable one; otherwise the freshest
 * unreliable packet does.
 */
inline SetSummary set_summary(std::span<const PacketState> packets, std::uint32_t gap) {
    std::optional<std::uint64_t> min_rel;
    std::optional<std::uint64_t> min_unrel;
    for (const PacketState& p : packets) {
        auto& slot = p.reliability == Reliability::reliable ? min_rel : min_unrel;
        if (!slot || p.age < *slot)
            slot = p.age;
    }
    if (min_rel && (!min_unrel || reliable_preferred(*min_rel, *min_unrel, gap)))
        return {PacketState{Reliability::reliable, *min_rel}};
    if (min_unrel)
        return {PacketState{Reliability::unreliable, *min_unrel}};
    return {};
}

}  // namespace gossip
