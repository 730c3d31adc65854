#include "cake/collusion.hpp"

#include <algorithm>

namespace cake {

namespace {

Rat left_of(const PieceSet& ps) { return ps.empty() ? Rat(1) : ps.left_edge(); }

} // namespace

CollusionResult run_moving_knife_with_collusion(const Instance& inst, int room,
                                                const std::optional<CollusionPact>& pact) {
    const int n = inst.n();
    if (!pact) {
        RunResult honest = run_online_moving_knife(inst, room);
        CollusionResult res;
        res.division = std::move(honest.division);
        res.trace = std::move(honest.trace);
        res.colluder_values = {inst.v(0).value(res.division.shares[0]),
                               inst.v(1).value(res.division.shares[1])};
        return res;
    }
    if (n < 4) throw domain_error("collusion requires at least 4 agents");
    if (room < 2 || room > n) throw domain_error("room size must be in [2, n]");

    CollusionResult res;
    res.division.shares.resize(n);
    Trace& tr = res.trace;
    PieceSet remaining = PieceSet::unit();
    int unallocated = n;
    std::vector<int> present;
    for (int i = 0; i < room; ++i) {
        tr.arrive(i, remaining, inst.v(i).value(remaining), unallocated);
        present.push_back(i);
    }
    int next_arrival = room;
    bool pact_alive = true;
    int stopper = -1;

    auto allocate_and_continue = [&](int pos, const PieceSet& slice) {
        int winner = present[pos];
        res.division.shares[winner] = slice;
        tr.allocate(winner, slice);
        tr.depart(winner);
        present.erase(present.begin() + pos);
        remaining = complement(remaining, slice);
        --unallocated;
        if (next_arrival < n) {
            tr.arrive(next_arrival, remaining, inst.v(next_arrival).value(remaining), unallocated);
            present.push_back(next_arrival);
            ++next_arrival;
        }
    };

    while (unallocated > 1) {
        bool both_present = std::find(present.begin(), present.end(), 0) != present.end() &&
                            std::find(present.begin(), present.end(), 1) != present.end();
        if (pact_alive && both_present) {
            pact_alive = false; // one attempt only; afterwards everyone plays honest
            Rat left = left_of(remaining);
            Rat frac = pact->threshold_fraction();
            bool feasible = inst.v(0).value(remaining) >= frac &&
                            inst.v(1).value(remaining) >= frac;
            if (feasible) {
                Rat t0 = mark_from(inst.v(0), remaining, left, frac);
                Rat t1 = mark_from(inst.v(1), remaining, left, frac);
                Rat joint = max(t0, t1);
                // honest agents in the room keep their usual stop positions
                bool preempted = false;
                std::vector<std::pair<int, Rat>> honest_stops;
                for (int a : present) {
                    if (a == 0 || a == 1) continue;
                    Rat target = inst.v(a).value(remaining) / Rat(unallocated);
                    Rat s = mark_from(inst.v(a), remaining, left, target);
                    honest_stops.emplace_back(a, s);
                    if (s < joint) preempted = true;
                }
                if (!preempted) {
                    res.pact_fired = true;
                    stopper = (t1 > t0) ? 1 : 0; // whoever's threshold is reached last calls
                    tr.stop_call(0, joint);
                    tr.stop_call(1, joint);
                    for (auto& [a, s] : honest_stops) tr.stop_call(a, s);
                    PieceSet slice = remaining.clip(left, joint);
                    res.captured = slice;
                    auto pos = std::find(present.begin(), present.end(), stopper);
                    allocate_and_continue(static_cast<int>(pos - present.begin()), slice);
                    // private split: one two-agent moving-knife round on the slice
                    KnifeRound sub = moving_knife_round(res.captured, inst, {0, 1}, 2);
                    res.split_trace.stop_call(0, sub.stops[0]);
                    res.split_trace.stop_call(1, sub.stops[1]);
                    int sub_winner = sub.winner; // 0 or 1 (colluder id)
                    PieceSet rest = complement(res.captured, sub.slice);
                    res.split.resize(2);
                    res.split[sub_winner] = sub.slice;
                    res.split[1 - sub_winner] = rest;
                    res.split_trace.allocate(sub_winner, sub.slice);
                    res.split_trace.allocate(1 - sub_winner, rest);
                    continue;
                }
            }
        }
        // honest round
        KnifeRound round = moving_knife_round(remaining, inst, present, unallocated);
        for (std::size_t i = 0; i < present.size(); ++i)
            tr.stop_call(present[i], round.stops[i]);
        allocate_and_continue(round.winner, round.slice);
    }
    int last = present.front();
    res.division.shares[last] = remaining;
    tr.allocate(last, remaining);
    tr.depart(last);

    res.colluder_values.resize(2);
    for (int c = 0; c < 2; ++c) {
        Rat v;
        if (res.pact_fired) {
            v = inst.v(c).value(res.split[c]);
            if (c != stopper) v += inst.v(c).value(res.division.shares[c]);
        } else {
            v = inst.v(c).value(res.division.shares[c]);
        }
        res.colluder_values[c] = v;
    }
    return res;
}

CollusionGain collusion_gain(const Instance& inst, int room, const CollusionPact& pact) {
    RunResult honest = run_online_moving_knife(inst, room);
    CollusionResult colluding = run_moving_knife_with_collusion(inst, room, pact);
    CollusionGain gain;
    gain.pact_fired = colluding.pact_fired;
    gain.honest_values = {inst.v(0).value(honest.division.shares[0]),
                          inst.v(1).value(honest.division.shares[1])};
    gain.colluding_values = colluding.colluder_values;
    return gain;
}

} // namespace cake
