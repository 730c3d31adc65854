#pragma once

#include "cake/pieces.hpp"

#include <map>
#include <optional>
#include <vector>

namespace cake {

/// Per-agent scripted deviations from the default risk-averse truthful play.
/// Each override applies whenever that agent faces the corresponding
/// decision; absent overrides fall back to the default behaviour.
struct AgentOverride {
    std::optional<Rat> cut_target;               // value the agent cuts off
    std::optional<std::vector<PieceSet>> marks;  // full replacement for split_equal
    std::optional<bool> accept;                  // cut-and-choose accept/decline
    std::optional<Rat> stop_position;            // moving-knife stop call
    std::optional<int> give_piece;               // mark-and-choose: index of piece given away
};

struct Strategy {
    std::map<int, AgentOverride> overrides; // key: agent index

    bool empty() const { return overrides.empty(); }

    const AgentOverride* for_agent(int agent) const {
        auto it = overrides.find(agent);
        return it == overrides.end() ? nullptr : &it->second;
    }
};

} // namespace cake
