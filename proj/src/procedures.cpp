#include "cake/procedures.hpp"

#include <algorithm>

namespace cake {

Procedure procedure_from_name(const std::string& name) {
    if (name == "occ") return Procedure::OnlineCutAndChoose;
    if (name == "omk") return Procedure::OnlineMovingKnife;
    if (name == "omc") return Procedure::OnlineMarkAndChoose;
    if (name == "cc") return Procedure::OfflineCutAndChoose;
    if (name == "mk") return Procedure::OfflineMovingKnife;
    throw domain_error("unknown procedure: '" + name + "'");
}

std::string procedure_name(Procedure p) {
    switch (p) {
        case Procedure::OnlineCutAndChoose: return "occ";
        case Procedure::OnlineMovingKnife: return "omk";
        case Procedure::OnlineMarkAndChoose: return "omc";
        case Procedure::OfflineCutAndChoose: return "cc";
        case Procedure::OfflineMovingKnife: return "mk";
    }
    throw domain_error("bad procedure id");
}

bool is_online(Procedure p) {
    return p == Procedure::OnlineCutAndChoose || p == Procedure::OnlineMovingKnife ||
           p == Procedure::OnlineMarkAndChoose;
}

Procedure offline_counterpart(Procedure p) {
    switch (p) {
        case Procedure::OnlineCutAndChoose: return Procedure::OfflineCutAndChoose;
        case Procedure::OnlineMovingKnife: return Procedure::OfflineMovingKnife;
        // mark-and-choose has no offline twin in the source procedures; it is
        // benchmarked against offline cut-and-choose, the closest sequential
        // cutting procedure.
        case Procedure::OnlineMarkAndChoose: return Procedure::OfflineCutAndChoose;
        default: throw domain_error("offline procedure has no offline counterpart");
    }
}

namespace {

Rat left_of(const PieceSet& ps) { return ps.empty() ? Rat(1) : ps.left_edge(); }

void require_agents(const Instance& inst, int minimum) {
    if (inst.n() < minimum) throw domain_error("instance needs at least " +
                                               std::to_string(minimum) + " agents");
}

} // namespace

RunResult run_online_cut_and_choose(const Instance& inst, const Strategy& strat) {
    require_agents(inst, 2);
    const int n = inst.n();
    Division div;
    div.shares.resize(n);
    Trace tr;
    PieceSet remaining = PieceSet::unit();
    int unallocated = n;
    int waiting = 0;
    tr.arrive(0, remaining, inst.v(0).value(remaining), unallocated);

    for (int next = 1; next < n; ++next) {
        const Valuation& vw = inst.v(waiting);
        Rat rw = vw.value(remaining);
        Rat target = rw / Rat(unallocated);
        const AgentOverride* ow = strat.for_agent(waiting);
        bool overridden = ow && ow->cut_target;
        if (overridden) target = *ow->cut_target;
        Rat left = left_of(remaining);
        Rat x;
        try {
            x = mark_from(vw, remaining, left, target);
        } catch (const infeasible_error&) {
            if (overridden)
                throw protocol_error("cut override infeasible for agent " +
                                     std::to_string(waiting + 1) + " in round " +
                                     std::to_string(n - unallocated + 1));
            throw;
        }
        PieceSet slice = remaining.clip(left, x);
        tr.cut(waiting, slice);

        Rat rn = inst.v(next).value(remaining);
        tr.arrive(next, remaining, rn, unallocated);

        Rat s = inst.v(next).value(slice);
        bool accept = s * Rat(unallocated) >= rn; // s >= r/k, ties accept
        const AgentOverride* on = strat.for_agent(next);
        if (on && on->accept) accept = *on->accept;
        tr.offer(slice, next, accept);

        int taker = accept ? next : waiting;
        div.shares[taker] = slice;
        tr.allocate(taker, slice);
        tr.depart(taker);
        if (!accept) waiting = next;
        remaining = complement(remaining, slice);
        --unallocated;
    }
    div.shares[waiting] = remaining;
    tr.allocate(waiting, remaining);
    tr.depart(waiting);
    return {std::move(div), std::move(tr)};
}

KnifeRound moving_knife_round(const PieceSet& region, const Instance& inst,
                              const std::vector<int>& agents, int denom,
                              const Strategy& strat) {
    Rat left = left_of(region);
    KnifeRound round;
    round.stops.reserve(agents.size());
    for (int a : agents) {
        const AgentOverride* o = strat.for_agent(a);
        if (o && o->stop_position) {
            round.stops.push_back(*o->stop_position);
        } else {
            Rat target = inst.v(a).value(region) / Rat(denom);
            round.stops.push_back(mark_from(inst.v(a), region, left, target));
        }
    }
    round.winner = 0;
    for (std::size_t i = 1; i < round.stops.size(); ++i)
        if (round.stops[i] < round.stops[round.winner]) round.winner = static_cast<int>(i);
    round.slice = region.clip(left, round.stops[round.winner]);
    return round;
}

RunResult run_online_moving_knife(const Instance& inst, int room, const Strategy& strat) {
    require_agents(inst, 2);
    const int n = inst.n();
    if (room < 2 || room > n) throw domain_error("room size must be in [2, n]");
    Division div;
    div.shares.resize(n);
    Trace tr;
    PieceSet remaining = PieceSet::unit();
    int unallocated = n;
    std::vector<int> present;
    for (int i = 0; i < room; ++i) {
        tr.arrive(i, remaining, inst.v(i).value(remaining), unallocated);
        present.push_back(i);
    }
    int next_arrival = room;

    while (unallocated > 1) {
        KnifeRound round = moving_knife_round(remaining, inst, present, unallocated, strat);
        for (std::size_t i = 0; i < present.size(); ++i)
            tr.stop_call(present[i], round.stops[i]);
        int winner = present[round.winner];
        div.shares[winner] = round.slice;
        tr.allocate(winner, round.slice);
        tr.depart(winner);
        present.erase(present.begin() + round.winner);
        remaining = complement(remaining, round.slice);
        --unallocated;
        if (next_arrival < n) {
            tr.arrive(next_arrival, remaining, inst.v(next_arrival).value(remaining), unallocated);
            present.push_back(next_arrival);
            ++next_arrival;
        }
    }
    int last = present.front();
    div.shares[last] = remaining;
    tr.allocate(last, remaining);
    tr.depart(last);
    return {std::move(div), std::move(tr)};
}

RunResult run_online_mark_and_choose(const Instance& inst, const Strategy& strat) {
    require_agents(inst, 2);
    const int n = inst.n();
    Division div;
    div.shares.resize(n);
    Trace tr;
    PieceSet remaining = PieceSet::unit();
    int unallocated = n;
    int waiting = 0;
    tr.arrive(0, remaining, inst.v(0).value(remaining), unallocated);

    for (int next = 1; next < n; ++next) {
        const int j = unallocated;
        std::vector<PieceSet> pieces;
        const AgentOverride* ow = strat.for_agent(waiting);
        if (ow && ow->marks) {
            pieces = *ow->marks;
            if (static_cast<int>(pieces.size()) != j)
                throw protocol_error("mark override for agent " + std::to_string(waiting + 1) +
                                     " must have " + std::to_string(j) + " pieces");
            PieceSet all;
            Rat len;
            for (const auto& p : pieces) {
                all = unite(all, p);
                len += p.total_length();
            }
            if (all != remaining || len != remaining.total_length())
                throw protocol_error("mark override for agent " + std::to_string(waiting + 1) +
                                     " does not partition the remaining cake");
        } else {
            pieces = split_equal(inst.v(waiting), remaining, j);
        }
        tr.mark(waiting, pieces);

        tr.arrive(next, remaining, inst.v(next).value(remaining), j);

        int give = 0;
        const AgentOverride* on = strat.for_agent(next);
        if (on && on->give_piece) {
            give = *on->give_piece;
            if (give < 0 || give >= j)
                throw protocol_error("give_piece override out of range for agent " +
                                     std::to_string(next + 1));
        } else {
            Rat best = inst.v(next).value(pieces[0]);
            for (int i = 1; i < j; ++i) {
                Rat val = inst.v(next).value(pieces[i]);
                if (val < best) { best = val; give = i; } // tie keeps sweep-earliest
            }
        }
        tr.offer(pieces[give], waiting, true);
        div.shares[waiting] = pieces[give];
        tr.allocate(waiting, pieces[give]);
        tr.depart(waiting);
        remaining = complement(remaining, pieces[give]);
        waiting = next;
        --unallocated;
    }
    div.shares[waiting] = remaining;
    tr.allocate(waiting, remaining);
    tr.depart(waiting);
    return {std::move(div), std::move(tr)};
}

RunResult run_offline_cut_and_choose(const Instance& inst) {
    require_agents(inst, 2);
    const int n = inst.n();
    Division div;
    div.shares.resize(n);
    Trace tr;
    PieceSet remaining = PieceSet::unit();
    std::vector<int> unallocated;
    for (int i = 0; i < n; ++i) {
        tr.arrive(i, remaining, inst.v(i).value(remaining), n);
        unallocated.push_back(i);
    }

    while (unallocated.size() > 1) {
        int cutter = unallocated.front();
        Rat target = inst.v(cutter).value(remaining) / Rat(static_cast<long>(unallocated.size()));
        Rat left = left_of(remaining);
        Rat x = mark_from(inst.v(cutter), remaining, left, target);
        PieceSet slice = remaining.clip(left, x);
        tr.cut(cutter, slice);

        // slice goes to whoever values it most; the cutter wins ties, other
        // ties break to the lowest index
        int winner = cutter;
        Rat best = inst.v(cutter).value(slice);
        for (int i : unallocated) {
            Rat val = inst.v(i).value(slice);
            if (val > best) { best = val; winner = i; }
        }
        div.shares[winner] = slice;
        tr.allocate(winner, slice);
        tr.depart(winner);
        unallocated.erase(std::find(unallocated.begin(), unallocated.end(), winner));
        remaining = complement(remaining, slice);
    }
    int last = unallocated.front();
    div.shares[last] = remaining;
    tr.allocate(last, remaining);
    tr.depart(last);
    return {std::move(div), std::move(tr)};
}

RunResult run_offline_moving_knife(const Instance& inst) {
    return run_online_moving_knife(inst, inst.n());
}

RunResult replay_with_strategy(const Instance& inst, Procedure p, const Strategy& strat,
                               int room) {
    switch (p) {
        case Procedure::OnlineCutAndChoose: return run_online_cut_and_choose(inst, strat);
        case Procedure::OnlineMovingKnife: return run_online_moving_knife(inst, room, strat);
        case Procedure::OnlineMarkAndChoose: return run_online_mark_and_choose(inst, strat);
        case Procedure::OfflineCutAndChoose: return run_offline_cut_and_choose(inst);
        case Procedure::OfflineMovingKnife: return run_offline_moving_knife(inst);
    }
    throw domain_error("bad procedure id");
}

} // namespace cake
