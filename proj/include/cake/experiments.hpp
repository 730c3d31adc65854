#pragma once

#include "cake/procedures.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cake {

/// Seeded random-instance generator. Breakpoints and masses are drawn on an
/// integer grid so every downstream quantity stays an exact rational.
struct GeneratorConfig {
    int n = 2;
    int segments = 8;
    std::uint64_t base_seed = 0;
    long value_grid = 1000000;
};

/// Deterministic in (base_seed, n, index).
std::uint64_t instance_seed(std::uint64_t base_seed, int n, std::uint64_t index);
Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t index);

/// Performance value with an explicit marker for the unbounded case
/// (an agent whose share is worth nothing to them).
struct Perf {
    bool unbounded = false;
    Rat value;

    static Perf of(const Rat& v) { return {false, v}; }
    static Perf unbounded_marker() { return {true, Rat(0)}; }
};

/// Reciprocal of the minimum own-share value.
Perf egalitarian_perf(const Instance& inst, const Division& div);
/// Reciprocal of the sum of own-share values.
Perf utilitarian_perf(const Instance& inst, const Division& div);
/// online / offline; an unbounded operand propagates.
Perf competitive_ratio(const Perf& online, const Perf& offline);

struct InstanceReport {
    int n;
    Procedure procedure;
    std::uint64_t seed;
    Perf egal_online, egal_offline, egal_ratio;
    Perf util_online, util_offline, util_ratio;
    std::vector<Rat> online_values, offline_values; // per-agent own-share values
};

struct RatioStats {
    long finite_count = 0;
    long unbounded_count = 0;
    Rat mean, median, min, max; // over finite ratios only
};

struct SummaryRow {
    int n;
    Procedure procedure;
    long trials;
    RatioStats egal;
    RatioStats util;
};

struct BatchConfig {
    std::vector<int> ns;
    long trials = 1;
    std::uint64_t base_seed = 0;
    int segments = 8;
    long value_grid = 1000000;
    std::vector<Procedure> procedures; // online procedures to evaluate
    int room = 2;
};

struct BatchResult {
    std::vector<InstanceReport> rows;
    std::vector<SummaryRow> summary;
};

BatchResult run_batch(const BatchConfig& cfg);

/// CSV writers; `flags_echo` is reproduced in a leading comment line.
void write_instance_csv(std::ostream& os, const BatchResult& res, const std::string& flags_echo);
void write_summary_csv(std::ostream& os, const BatchResult& res, const std::string& flags_echo);

} // namespace cake
