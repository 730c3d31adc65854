#pragma once

#include "cake/procedures.hpp"

#include <optional>

namespace cake {

/// Pact between the first two arrivals in the online moving knife: neither
/// calls stop before the knife covers a slice worth (p-1)/p of the total to
/// both of them; a captured slice is split privately by one two-agent
/// moving-knife round.
struct CollusionPact {
    int p = 4; // threshold fraction is (p-1)/p

    CollusionPact() = default;
    explicit CollusionPact(int p_) : p(p_) {
        if (p < 3) throw domain_error("collusion pact needs p >= 3");
    }
    Rat threshold_fraction() const { return Rat(p - 1, p); }
    Rat guarantee() const { return Rat(p - 1, 2L * p); } // (p-1)/(2p)
};

struct CollusionResult {
    Division division; // the formal protocol outcome (captured slice -> the stopper)
    Trace trace;
    bool pact_fired = false;
    PieceSet captured;                 // slice taken at the joint stop, when fired
    std::vector<PieceSet> split;       // private split of the captured slice [colluder0, colluder1]
    Trace split_trace;                 // the two-agent sub-round, for audit
    std::vector<Rat> colluder_values;  // effective value per colluder (split share
                                       // plus any later formal allocation)
};

/// Colluders are the first two arrivals. Requires n >= 4. With no pact this
/// degenerates to the honest online moving knife.
CollusionResult run_moving_knife_with_collusion(const Instance& inst, int room,
                                                const std::optional<CollusionPact>& pact);

struct CollusionGain {
    bool pact_fired;
    std::vector<Rat> honest_values;    // per colluder, from the honest run
    std::vector<Rat> colluding_values; // per colluder, from the colluding run
};
CollusionGain collusion_gain(const Instance& inst, int room, const CollusionPact& pact);

} // namespace cake
