#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cake/experiments.hpp"
#include "fixtures.hpp"

#include <set>
#include <sstream>

using namespace cake;

namespace {

Rat R(long n, long d = 1) { return Rat(n, d); }

} // namespace

TEST_CASE("instance seeds are stable and spread") {
    CHECK(instance_seed(1, 4, 0) == instance_seed(1, 4, 0));
    std::set<std::uint64_t> seen;
    for (int n : {2, 4, 8})
        for (std::uint64_t i = 0; i < 50; ++i) seen.insert(instance_seed(9, n, i));
    CHECK(seen.size() == 150);
    CHECK(instance_seed(1, 4, 0) != instance_seed(2, 4, 0));
}

TEST_CASE("generated instances are valid and deterministic") {
    GeneratorConfig cfg{4, 8, 123, 1000000};
    Instance a = generate_instance(cfg, 7);
    Instance b = generate_instance(cfg, 7);
    REQUIRE(a.n() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(a.v(i) == b.v(i));
        CHECK(a.v(i).breakpoints().size() == 7);
        CHECK(a.v(i).value(PieceSet::unit()) == R(1));
    }
    CHECK_FALSE(a.v(0) == a.v(1));

    GeneratorConfig flat{3, 1, 5, 1000000};
    Instance c = generate_instance(flat, 0);
    for (int i = 0; i < 3; ++i) {
        CHECK(c.v(i).breakpoints().empty());
        CHECK(c.v(i).value(Interval(R(0), R(1, 3))) == R(1, 3));
    }

    CHECK_THROWS_AS(generate_instance(GeneratorConfig{2, 0, 1, 1000000}, 0), domain_error);
}

TEST_CASE("performance measures") {
    Instance inst = fixtures::three_blocks();
    Division even{{PieceSet({Interval(R(0), R(1, 3))}), PieceSet({Interval(R(1, 3), R(2, 3))}),
                   PieceSet({Interval(R(2, 3), R(1))})}};
    // own values: 0 for agent 1, 1/2 for agent 2, wait: v1 is uniform on [1/2,1]
    Perf egal = egalitarian_perf(inst, even);
    CHECK(egal.unbounded); // v1([0,1/3]) = 0
    Perf util = utilitarian_perf(inst, even);
    CHECK_FALSE(util.unbounded);
    // v1 = 0, v2([1/3,2/3]) = 1/2, v3([2/3,1]) = 1/9
    CHECK(util.value == R(1) / (R(1, 2) + R(1, 9)));

    Perf ratio = competitive_ratio(Perf::of(R(3)), Perf::of(R(2)));
    CHECK(ratio.value == R(3, 2));
    CHECK(competitive_ratio(Perf::unbounded_marker(), Perf::of(R(2))).unbounded);
    CHECK(competitive_ratio(Perf::of(R(2)), Perf::unbounded_marker()).unbounded);
}

TEST_CASE("perfect correlation gives ratio one for the moving knife") {
    // identical valuations: the online moving knife matches the offline one
    for (int trial = 0; trial < 10; ++trial) {
        GeneratorConfig cfg{1, 8, 500, 1000000};
        Valuation v = generate_instance(cfg, static_cast<std::uint64_t>(trial)).v(0);
        Instance inst{{v, v, v, v}};
        RunResult online = run_online_moving_knife(inst, 2);
        RunResult offline = run_offline_moving_knife(inst);
        CHECK(online.division == offline.division);
        Perf ratio = competitive_ratio(utilitarian_perf(inst, online.division),
                                       utilitarian_perf(inst, offline.division));
        REQUIRE_FALSE(ratio.unbounded);
        CHECK(ratio.value == R(1));
    }
}

TEST_CASE("batch runner validates its configuration") {
    BatchConfig cfg;
    cfg.ns = {4};
    cfg.trials = 0;
    cfg.procedures = {Procedure::OnlineCutAndChoose};
    CHECK_THROWS_AS(run_batch(cfg), domain_error);
    cfg.trials = 1;
    cfg.procedures = {};
    CHECK_THROWS_AS(run_batch(cfg), domain_error);
    cfg.procedures = {Procedure::OfflineCutAndChoose};
    CHECK_THROWS_AS(run_batch(cfg), domain_error);
    cfg.procedures = {Procedure::OnlineCutAndChoose};
    cfg.ns = {1};
    CHECK_THROWS_AS(run_batch(cfg), domain_error);
}

TEST_CASE("batch results are deterministic and bounded") {
    BatchConfig cfg;
    cfg.ns = {2, 4};
    cfg.trials = 25;
    cfg.base_seed = 11;
    cfg.segments = 6;
    cfg.procedures = {Procedure::OnlineCutAndChoose, Procedure::OnlineMovingKnife,
                      Procedure::OnlineMarkAndChoose};
    BatchResult a = run_batch(cfg);
    BatchResult b = run_batch(cfg);
    REQUIRE(a.rows.size() == 2 * 25 * 3);
    REQUIRE(a.summary.size() == 2 * 3);
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].util_ratio.unbounded == b.rows[i].util_ratio.unbounded);
        CHECK(a.rows[i].util_ratio.value == b.rows[i].util_ratio.value);
        CHECK(a.rows[i].egal_ratio.value == b.rows[i].egal_ratio.value);
        // utilitarian competitive ratio never exceeds n^2
        if (!a.rows[i].util_ratio.unbounded)
            CHECK(a.rows[i].util_ratio.value <= Rat(a.rows[i].n) * Rat(a.rows[i].n));
    }
    for (const auto& s : a.summary) {
        CHECK(s.trials == 25);
        CHECK(s.util.finite_count + s.util.unbounded_count == 25);
        if (s.util.finite_count > 0) {
            CHECK(s.util.min <= s.util.median);
            CHECK(s.util.median <= s.util.max);
            CHECK(s.util.min <= s.util.mean);
            CHECK(s.util.mean <= s.util.max);
        }
    }
}

TEST_CASE("csv writers emit the documented layout") {
    BatchConfig cfg;
    cfg.ns = {2};
    cfg.trials = 3;
    cfg.base_seed = 4;
    cfg.segments = 4;
    cfg.procedures = {Procedure::OnlineCutAndChoose};
    BatchResult res = run_batch(cfg);

    std::ostringstream inst_csv;
    write_instance_csv(inst_csv, res, "trials=3 seed=4");
    std::istringstream in(inst_csv.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# trials=3 seed=4");
    std::getline(in, line);
    CHECK(line.substr(0, 12) == "n,procedure,");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.substr(0, 6) == "2,occ,");
        CHECK(std::count(line.begin(), line.end(), ',') == 15);
    }
    CHECK(rows == 3);

    std::ostringstream sum_csv;
    write_summary_csv(sum_csv, res, "trials=3 seed=4");
    std::istringstream sin(sum_csv.str());
    std::getline(sin, line);
    CHECK(line == "# trials=3 seed=4");
    std::getline(sin, line);
    int header_cols = static_cast<int>(std::count(line.begin(), line.end(), ',')) + 1;
    std::getline(sin, line);
    CHECK(static_cast<int>(std::count(line.begin(), line.end(), ',')) + 1 == header_cols);
    CHECK(line.substr(0, 8) == "2,occ,3,");
}

TEST_CASE("unbounded online egalitarian ratio with positive offline floor") {
    // cut-and-choose variant
    {
        Instance inst = fixtures::unbounded_cc_instance();
        Division online = run_online_cut_and_choose(inst).division;
        Division offline = run_offline_cut_and_choose(inst).division;
        CHECK(egalitarian_perf(inst, online).unbounded);
        Perf off = egalitarian_perf(inst, offline);
        REQUIRE_FALSE(off.unbounded);
        CHECK(off.value == R(4)); // offline minimum is exactly 1/4
        CHECK(competitive_ratio(egalitarian_perf(inst, online), off).unbounded);
    }
    // moving-knife variant
    {
        Instance inst = fixtures::unbounded_mk_instance();
        Division online = run_online_moving_knife(inst, 2).division;
        Division offline = run_offline_moving_knife(inst).division;
        CHECK(egalitarian_perf(inst, online).unbounded);
        Perf off = egalitarian_perf(inst, offline);
        REQUIRE_FALSE(off.unbounded);
        CHECK(off.value == R(3)); // offline minimum is exactly 1/3
        CHECK(competitive_ratio(egalitarian_perf(inst, online), off).unbounded);
    }
}
