#pragma once

#include "cake/fairness.hpp"
#include "cake/strategy.hpp"
#include "cake/trace.hpp"

#include <json.hpp>

namespace cake {

using nlohmann::json;

// Rationals travel as "p/q" strings; agents as 1-indexed ids.

json to_json(const Rat& r);
json to_json(const PieceSet& ps);
json to_json(const Valuation& v);
json to_json(const Instance& inst);
json to_json(const Division& div);
json to_json(const Trace& tr);

Rat rat_from_json(const json& j);
PieceSet pieces_from_json(const json& j);
Valuation valuation_from_json(const json& j);
Instance instance_from_json(const json& j);
Division division_from_json(const json& j);
Trace trace_from_json(const json& j);
Strategy strategy_from_json(const json& j);

Instance load_instance(const std::string& path);
Strategy load_strategy(const std::string& path);
Division load_division(const std::string& path);
Trace load_trace(const std::string& path);

} // namespace cake
