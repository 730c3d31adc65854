#pragma once

#include "cake/pieces.hpp"
#include "cake/valuation.hpp"

#include <vector>

namespace cake {

/// Agents are 0-indexed internally; JSON uses 1-indexed ids.
struct Instance {
    std::vector<Valuation> valuations; // index = arrival position

    int n() const { return static_cast<int>(valuations.size()); }
    const Valuation& v(int agent) const { return valuations.at(agent); }
};

/// Final partition of [0,1]: shares[i] is agent i's allocation.
struct Division {
    std::vector<PieceSet> shares;

    /// Exact partition check: union is [0,1] and lengths sum to 1.
    bool partitions_unit() const;

    friend bool operator==(const Division& a, const Division& b) { return a.shares == b.shares; }
};

struct Event {
    enum class Kind { Arrive, Cut, Mark, StopCall, Offer, Allocate, Depart };

    Kind kind;
    int agent = -1;
    int time = 0; // index in the trace

    // Arrive
    PieceSet remaining;
    Rat r;
    int k = 0;
    // Cut / Offer / Allocate payload
    PieceSet pieces;
    // Mark
    std::vector<PieceSet> marks;
    // StopCall
    Rat position;
    // Offer
    int to_agent = -1;
    bool accepted = false;

    friend bool operator==(const Event& a, const Event& b) {
        return a.kind == b.kind && a.agent == b.agent && a.time == b.time &&
               a.remaining == b.remaining && a.r == b.r && a.k == b.k &&
               a.pieces == b.pieces && a.marks == b.marks && a.position == b.position &&
               a.to_agent == b.to_agent && a.accepted == b.accepted;
    }
};

struct Trace {
    std::vector<Event> events;

    Event& push(Event e) {
        e.time = static_cast<int>(events.size());
        events.push_back(std::move(e));
        return events.back();
    }

    void arrive(int agent, const PieceSet& remaining, const Rat& r, int k);
    void cut(int agent, const PieceSet& slice);
    void mark(int agent, const std::vector<PieceSet>& pieces);
    void stop_call(int agent, const Rat& pos);
    void offer(const PieceSet& slice, int to_agent, bool accepted);
    void allocate(int agent, const PieceSet& pieces);
    void depart(int agent);

    /// Index of agent's single event of the given kind, or -1.
    int find(Event::Kind kind, int agent) const;

    friend bool operator==(const Trace& a, const Trace& b) { return a.events == b.events; }
};

struct RunResult {
    Division division;
    Trace trace;
};

} // namespace cake
