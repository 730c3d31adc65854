#include "cake/fairness.hpp"

#include <algorithm>
#include <numeric>

namespace cake {

namespace {

void require_partition(const Instance& inst, const Division& div) {
    if (static_cast<int>(div.shares.size()) != inst.n())
        throw domain_error("division has wrong number of shares");
    if (!div.partitions_unit())
        throw domain_error("division does not partition [0,1]");
}

} // namespace

std::vector<AgentVerdict> check_proportional(const Instance& inst, const Division& div) {
    require_partition(inst, div);
    std::vector<AgentVerdict> out;
    Rat threshold = Rat(1) / Rat(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        Rat own = inst.v(i).value(div.shares[i]);
        out.push_back({i, own >= threshold, own, threshold});
    }
    return out;
}

std::vector<PairVerdict> check_envy_free(const Instance& inst, const Division& div) {
    require_partition(inst, div);
    std::vector<PairVerdict> out;
    for (int i = 0; i < inst.n(); ++i) {
        Rat own = inst.v(i).value(div.shares[i]);
        for (int j = 0; j < inst.n(); ++j) {
            if (i == j) continue;
            Rat other = inst.v(i).value(div.shares[j]);
            out.push_back({i, j, other <= own, own, other});
        }
    }
    return out;
}

EquitableVerdict check_equitable(const Instance& inst, const Division& div) {
    require_partition(inst, div);
    EquitableVerdict verdict;
    verdict.passed = true;
    for (int i = 0; i < inst.n(); ++i) {
        verdict.own_values.push_back(inst.v(i).value(div.shares[i]));
        if (verdict.own_values[i] != verdict.own_values[0]) verdict.passed = false;
    }
    return verdict;
}

std::vector<AgentVerdict> check_weak_proportional(const Trace& tr, const Instance& inst,
                                                  const Division& div) {
    require_partition(inst, div);
    std::vector<AgentVerdict> out;
    for (int i = 0; i < inst.n(); ++i) {
        int at = tr.find(Event::Kind::Arrive, i);
        if (at < 0) throw domain_error("trace has no arrival for agent " + std::to_string(i + 1));
        const Event& arrive = tr.events[at];
        Rat own = inst.v(i).value(div.shares[i]);
        Rat threshold = arrive.r / Rat(arrive.k);
        out.push_back({i, own >= threshold, own, threshold});
    }
    return out;
}

namespace {

// Envy against allocations inside an event window (arrival..horizon].
std::vector<AgentVerdict> windowed_envy(const Trace& tr, const Instance& inst,
                                        const Division& div, bool until_departure) {
    std::vector<AgentVerdict> out;
    for (int i = 0; i < static_cast<int>(div.shares.size()); ++i) {
        int from = tr.find(Event::Kind::Arrive, i);
        int to = until_departure ? tr.find(Event::Kind::Depart, i)
                                 : static_cast<int>(tr.events.size());
        Rat own = inst.v(i).value(div.shares[i]);
        bool ok = true;
        Rat worst = own;
        for (int t = from + 1; t < to; ++t) {
            const Event& e = tr.events[t];
            if (e.kind != Event::Kind::Allocate || e.agent == i) continue;
            Rat val = inst.v(i).value(e.pieces);
            if (val > own) { ok = false; if (val > worst) worst = val; }
        }
        out.push_back({i, ok, own, worst});
    }
    return out;
}

} // namespace

std::vector<AgentVerdict> check_immediate_envy_free(const Trace& tr, const Instance& inst,
                                                    const Division& div) {
    require_partition(inst, div);
    return windowed_envy(tr, inst, div, /*until_departure=*/true);
}

std::vector<AgentVerdict> check_weak_envy_free(const Trace& tr, const Instance& inst,
                                               const Division& div) {
    require_partition(inst, div);
    return windowed_envy(tr, inst, div, /*until_departure=*/false);
}

Instance move_agent_earlier(const Instance& inst, int mover, int new_pos) {
    if (mover < 0 || mover >= inst.n() || new_pos < 0 || new_pos >= mover)
        throw domain_error("move_agent_earlier: new position must be earlier than the mover");
    Instance out;
    out.valuations.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        if (i == mover) continue;
        if (static_cast<int>(out.valuations.size()) == new_pos)
            out.valuations.push_back(inst.v(mover));
        out.valuations.push_back(inst.v(i));
    }
    return out;
}

OrderMonotonicityReport check_order_monotonic(Procedure p, const Instance& inst, int mover,
                                              int new_pos, int room,
                                              const Strategy& permuted_strat) {
    RunResult before = replay_with_strategy(inst, p, {}, room);
    Instance moved = move_agent_earlier(inst, mover, new_pos);
    RunResult after = replay_with_strategy(moved, p, permuted_strat, room);
    Rat vb = inst.v(mover).value(before.division.shares[mover]);
    Rat va = inst.v(mover).value(after.division.shares[new_pos]);
    return {vb, va, va < vb};
}

std::optional<DominationResult> pareto_dominated_by_permutation(const Instance& inst,
                                                                const Division& div,
                                                                int max_agents) {
    require_partition(inst, div);
    const int n = inst.n();
    if (n > max_agents)
        throw domain_error("pareto check refused: " + std::to_string(n) + " agents exceeds the " +
                           std::to_string(max_agents) + "-agent brute-force bound");
    // value[i][j] = agent i's value of share j
    std::vector<std::vector<Rat>> value(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) value[i][j] = inst.v(i).value(div.shares[j]);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<DominationResult> weak;
    do {
        bool dominates = true;
        bool strict = true;
        bool any_strict = false;
        for (int i = 0; i < n && dominates; ++i) {
            if (value[i][perm[i]] < value[i][i]) dominates = false;
            else if (value[i][perm[i]] > value[i][i]) any_strict = true;
            else strict = false;
        }
        if (dominates && any_strict) {
            if (strict) return DominationResult{perm, true};
            if (!weak) weak = DominationResult{perm, false};
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return weak;
}

Valuation adversarial_last_valuation(const PieceSet& first_departer_share) {
    if (first_departer_share.empty())
        throw domain_error("adversarial valuation needs a non-empty share");
    return Valuation::concentrated_on(first_departer_share);
}

} // namespace cake
