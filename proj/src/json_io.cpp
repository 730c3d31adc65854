#include "cake/json_io.hpp"

#include <fstream>

namespace cake {

json to_json(const Rat& r) { return r.str(); }

json to_json(const PieceSet& ps) {
    json arr = json::array();
    for (const auto& iv : ps.intervals()) arr.push_back({iv.lo.str(), iv.hi.str()});
    return arr;
}

json to_json(const Valuation& v) {
    json bps = json::array();
    for (const auto& b : v.breakpoints()) bps.push_back(b.str());
    json masses = json::array();
    for (const auto& m : v.masses()) masses.push_back(m.str());
    return {{"breakpoints", bps}, {"masses", masses}};
}

json to_json(const Instance& inst) {
    json agents = json::array();
    for (const auto& v : inst.valuations) agents.push_back(to_json(v));
    return {{"agents", agents}};
}

json to_json(const Division& div) {
    json shares = json::array();
    for (const auto& s : div.shares) shares.push_back(to_json(s));
    return {{"shares", shares}};
}

namespace {

const char* kind_name(Event::Kind k) {
    switch (k) {
        case Event::Kind::Arrive: return "arrive";
        case Event::Kind::Cut: return "cut";
        case Event::Kind::Mark: return "mark";
        case Event::Kind::StopCall: return "stop";
        case Event::Kind::Offer: return "offer";
        case Event::Kind::Allocate: return "allocate";
        case Event::Kind::Depart: return "depart";
    }
    return "?";
}

Event::Kind kind_from(const std::string& s) {
    if (s == "arrive") return Event::Kind::Arrive;
    if (s == "cut") return Event::Kind::Cut;
    if (s == "mark") return Event::Kind::Mark;
    if (s == "stop") return Event::Kind::StopCall;
    if (s == "offer") return Event::Kind::Offer;
    if (s == "allocate") return Event::Kind::Allocate;
    if (s == "depart") return Event::Kind::Depart;
    throw domain_error("unknown trace event kind: '" + s + "'");
}

} // namespace

json to_json(const Trace& tr) {
    json events = json::array();
    for (const auto& e : tr.events) {
        json j{{"kind", kind_name(e.kind)}, {"t", e.time}};
        if (e.agent >= 0) j["agent"] = e.agent + 1;
        switch (e.kind) {
            case Event::Kind::Arrive:
                j["remaining"] = to_json(e.remaining);
                j["r"] = e.r.str();
                j["k"] = e.k;
                break;
            case Event::Kind::Cut:
            case Event::Kind::Allocate:
                j["pieces"] = to_json(e.pieces);
                break;
            case Event::Kind::Mark: {
                json marks = json::array();
                for (const auto& p : e.marks) marks.push_back(to_json(p));
                j["pieces"] = marks;
                break;
            }
            case Event::Kind::StopCall:
                j["position"] = e.position.str();
                break;
            case Event::Kind::Offer:
                j["pieces"] = to_json(e.pieces);
                j["to"] = e.to_agent + 1;
                j["accepted"] = e.accepted;
                break;
            case Event::Kind::Depart:
                break;
        }
        events.push_back(std::move(j));
    }
    return {{"events", events}};
}

Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw domain_error("expected rational string, got: " + j.dump());
    return Rat::parse(j.get<std::string>());
}

PieceSet pieces_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("piece set must be an array of [lo,hi] pairs");
    std::vector<Interval> ivs;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw domain_error("interval must be a [lo,hi] pair");
        ivs.emplace_back(rat_from_json(pair[0]), rat_from_json(pair[1]));
    }
    return PieceSet(std::move(ivs));
}

Valuation valuation_from_json(const json& j) {
    if (!j.contains("breakpoints")) throw domain_error("agent valuation missing 'breakpoints'");
    if (!j.contains("masses")) throw domain_error("agent valuation missing 'masses'");
    std::vector<Rat> bps, masses;
    for (const auto& b : j.at("breakpoints")) bps.push_back(rat_from_json(b));
    for (const auto& m : j.at("masses")) masses.push_back(rat_from_json(m));
    return Valuation(std::move(bps), std::move(masses));
}

Instance instance_from_json(const json& j) {
    if (!j.contains("agents")) throw domain_error("instance missing 'agents'");
    Instance inst;
    for (const auto& a : j.at("agents")) inst.valuations.push_back(valuation_from_json(a));
    return inst;
}

Division division_from_json(const json& j) {
    if (!j.contains("shares")) throw domain_error("division missing 'shares'");
    Division div;
    for (const auto& s : j.at("shares")) div.shares.push_back(pieces_from_json(s));
    return div;
}

Trace trace_from_json(const json& j) {
    if (!j.contains("events")) throw domain_error("trace missing 'events'");
    Trace tr;
    for (const auto& je : j.at("events")) {
        Event e;
        e.kind = kind_from(je.at("kind").get<std::string>());
        if (je.contains("agent")) e.agent = je.at("agent").get<int>() - 1;
        switch (e.kind) {
            case Event::Kind::Arrive:
                e.remaining = pieces_from_json(je.at("remaining"));
                e.r = rat_from_json(je.at("r"));
                e.k = je.at("k").get<int>();
                break;
            case Event::Kind::Cut:
            case Event::Kind::Allocate:
                e.pieces = pieces_from_json(je.at("pieces"));
                break;
            case Event::Kind::Mark:
                for (const auto& p : je.at("pieces")) e.marks.push_back(pieces_from_json(p));
                break;
            case Event::Kind::StopCall:
                e.position = rat_from_json(je.at("position"));
                break;
            case Event::Kind::Offer:
                e.pieces = pieces_from_json(je.at("pieces"));
                e.to_agent = je.at("to").get<int>() - 1;
                e.accepted = je.at("accepted").get<bool>();
                break;
            case Event::Kind::Depart:
                break;
        }
        tr.push(std::move(e));
    }
    return tr;
}

Strategy strategy_from_json(const json& j) {
    Strategy strat;
    if (!j.contains("overrides")) return strat;
    for (const auto& o : j.at("overrides")) {
        int agent = o.at("agent").get<int>() - 1;
        AgentOverride& ov = strat.overrides[agent];
        if (o.contains("cut_target")) ov.cut_target = rat_from_json(o.at("cut_target"));
        if (o.contains("accept")) ov.accept = o.at("accept").get<bool>();
        if (o.contains("stop_position")) ov.stop_position = rat_from_json(o.at("stop_position"));
        if (o.contains("give_piece")) ov.give_piece = o.at("give_piece").get<int>() - 1;
        if (o.contains("mark")) {
            std::vector<PieceSet> marks;
            for (const auto& p : o.at("mark")) marks.push_back(pieces_from_json(p));
            ov.marks = std::move(marks);
        }
    }
    return strat;
}

namespace {

json load_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw domain_error(std::string(what) + " file not readable: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw domain_error(std::string(what) + " file is not valid JSON (" + path + "): " +
                           e.what());
    }
    return j;
}

} // namespace

Instance load_instance(const std::string& path) {
    return instance_from_json(load_file(path, "instance"));
}

Strategy load_strategy(const std::string& path) {
    return strategy_from_json(load_file(path, "strategy"));
}

Division load_division(const std::string& path) {
    return division_from_json(load_file(path, "division"));
}

Trace load_trace(const std::string& path) {
    return trace_from_json(load_file(path, "trace"));
}

} // namespace cake
