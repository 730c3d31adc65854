#pragma once

#include "cake/procedures.hpp"

#include <optional>
#include <vector>

namespace cake {

/// Per-agent verdict with the witness values behind it. All comparisons are
/// exact; there are no tolerances anywhere in the checkers.
struct AgentVerdict {
    int agent;
    bool passed;
    Rat own_value;
    Rat threshold; // what own_value was compared against
};

struct PairVerdict {
    int agent;   // the potentially envious agent
    int other;   // whose share is envied
    bool passed; // false iff agent strictly prefers other's share
    Rat own_value;
    Rat other_value;
};

std::vector<AgentVerdict> check_proportional(const Instance& inst, const Division& div);
std::vector<PairVerdict> check_envy_free(const Instance& inst, const Division& div);

struct EquitableVerdict {
    bool passed;
    std::vector<Rat> own_values;
};
EquitableVerdict check_equitable(const Instance& inst, const Division& div);

std::vector<AgentVerdict> check_weak_proportional(const Trace& tr, const Instance& inst,
                                                  const Division& div);
std::vector<AgentVerdict> check_immediate_envy_free(const Trace& tr, const Instance& inst,
                                                    const Division& div);
std::vector<AgentVerdict> check_weak_envy_free(const Trace& tr, const Instance& inst,
                                               const Division& div);

/// Runs the procedure with `mover` shifted earlier to `new_pos` (0-indexed,
/// all other agents keeping their relative order) and reports the mover's
/// value of their own share before and after. `permuted_strat` scripts the
/// permuted run (agent indices refer to positions in the permuted order).
struct OrderMonotonicityReport {
    Rat value_before;
    Rat value_after;
    bool decreased; // a true value here refutes order monotonicity
};
OrderMonotonicityReport check_order_monotonic(Procedure p, const Instance& inst, int mover,
                                              int new_pos, int room = 2,
                                              const Strategy& permuted_strat = {});

/// Brute-force search over all n! reassignments of the produced shares.
/// Returns a permutation (perm[i] = index of the share agent i receives)
/// that weakly dominates the division, if one exists; `strict` is set when
/// every agent strictly improves. A necessary-condition check only — full
/// Pareto optimality over arbitrary divisions is out of reach.
struct DominationResult {
    std::vector<int> perm;
    bool strict;
};
std::optional<DominationResult> pareto_dominated_by_permutation(const Instance& inst,
                                                                const Division& div,
                                                                int max_agents = 8);

/// Valuation placing mass 1 uniformly on the given share, zero elsewhere.
/// Plugging it in as the last agent's valuation makes any online procedure
/// non-proportional.
Valuation adversarial_last_valuation(const PieceSet& first_departer_share);

/// Instance with `mover` relocated to new_pos (earlier), others in order.
Instance move_agent_earlier(const Instance& inst, int mover, int new_pos);

} // namespace cake
