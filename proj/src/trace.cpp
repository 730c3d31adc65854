#include "cake/trace.hpp"

namespace cake {

bool Division::partitions_unit() const {
    PieceSet all;
    Rat len;
    for (const auto& s : shares) {
        all = unite(all, s);
        len += s.total_length();
    }
    return all == PieceSet::unit() && len == Rat(1);
}

void Trace::arrive(int agent, const PieceSet& remaining, const Rat& r, int k) {
    Event e;
    e.kind = Event::Kind::Arrive;
    e.agent = agent;
    e.remaining = remaining;
    e.r = r;
    e.k = k;
    push(std::move(e));
}

void Trace::cut(int agent, const PieceSet& slice) {
    Event e;
    e.kind = Event::Kind::Cut;
    e.agent = agent;
    e.pieces = slice;
    push(std::move(e));
}

void Trace::mark(int agent, const std::vector<PieceSet>& pieces) {
    Event e;
    e.kind = Event::Kind::Mark;
    e.agent = agent;
    e.marks = pieces;
    push(std::move(e));
}

void Trace::stop_call(int agent, const Rat& pos) {
    Event e;
    e.kind = Event::Kind::StopCall;
    e.agent = agent;
    e.position = pos;
    push(std::move(e));
}

void Trace::offer(const PieceSet& slice, int to_agent, bool accepted) {
    Event e;
    e.kind = Event::Kind::Offer;
    e.pieces = slice;
    e.to_agent = to_agent;
    e.accepted = accepted;
    push(std::move(e));
}

void Trace::allocate(int agent, const PieceSet& pieces) {
    Event e;
    e.kind = Event::Kind::Allocate;
    e.agent = agent;
    e.pieces = pieces;
    push(std::move(e));
}

void Trace::depart(int agent) {
    Event e;
    e.kind = Event::Kind::Depart;
    e.agent = agent;
    push(std::move(e));
}

int Trace::find(Event::Kind kind, int agent) const {
    for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].kind == kind && events[i].agent == agent) return static_cast<int>(i);
    return -1;
}

} // namespace cake
