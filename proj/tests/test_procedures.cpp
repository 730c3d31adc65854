#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cake/experiments.hpp"
#include "cake/procedures.hpp"
#include "fixtures.hpp"

using namespace cake;

namespace {

Rat R(long n, long d = 1) { return Rat(n, d); }

PieceSet span(long nlo, long dlo, long nhi, long dhi) {
    return PieceSet({Interval(Rat(nlo, dlo), Rat(nhi, dhi))});
}

} // namespace

TEST_CASE("procedure names round-trip") {
    for (auto p : {Procedure::OnlineCutAndChoose, Procedure::OnlineMovingKnife,
                   Procedure::OnlineMarkAndChoose, Procedure::OfflineCutAndChoose,
                   Procedure::OfflineMovingKnife})
        CHECK(procedure_from_name(procedure_name(p)) == p);
    CHECK_THROWS_AS(procedure_from_name("bogus"), domain_error);
    CHECK(is_online(Procedure::OnlineMarkAndChoose));
    CHECK_FALSE(is_online(Procedure::OfflineMovingKnife));
    CHECK(offline_counterpart(Procedure::OnlineCutAndChoose) == Procedure::OfflineCutAndChoose);
    CHECK(offline_counterpart(Procedure::OnlineMovingKnife) == Procedure::OfflineMovingKnife);
    CHECK(offline_counterpart(Procedure::OnlineMarkAndChoose) == Procedure::OfflineCutAndChoose);
}

TEST_CASE("two agents, cut and choose") {
    Instance inst{{Valuation::uniform_on(R(0), R(1)), Valuation::uniform_on(R(0), R(1, 2))}};
    RunResult res = run_online_cut_and_choose(inst);
    CHECK(res.division.shares[0] == span(1, 2, 1, 1));
    CHECK(res.division.shares[1] == span(0, 1, 1, 2));
    CHECK(res.division.partitions_unit());
}

TEST_CASE("three blocks under cut and choose") {
    RunResult res = run_online_cut_and_choose(fixtures::three_blocks());
    CHECK(res.division.shares[0] == span(5, 6, 1, 1));
    CHECK(res.division.shares[1] == span(0, 1, 2, 3));
    CHECK(res.division.shares[2] == span(2, 3, 5, 6));
    CHECK(res.division.partitions_unit());

    // agent 2 accepts the first slice, agent 3 the second
    REQUIRE(res.trace.events.size() >= 3);
    int offer1 = -1, offer2 = -1;
    for (const auto& e : res.trace.events) {
        if (e.kind != Event::Kind::Offer) continue;
        (offer1 < 0 ? offer1 : offer2) = e.time;
    }
    CHECK(res.trace.events[offer1].accepted);
    CHECK(res.trace.events[offer1].to_agent == 1);
    CHECK(res.trace.events[offer2].accepted);
    CHECK(res.trace.events[offer2].to_agent == 2);
}

TEST_CASE("three blocks under the moving knife") {
    RunResult res = run_online_moving_knife(fixtures::three_blocks(), 2);
    CHECK(res.division.shares[0] == span(47, 72, 1, 1));
    CHECK(res.division.shares[1] == span(0, 1, 5, 9));
    CHECK(res.division.shares[2] == span(5, 9, 47, 72));
    CHECK(res.division.partitions_unit());

    // the two winning stop calls sit at 5/9 and 47/72
    std::vector<Rat> cuts;
    for (const auto& e : res.trace.events)
        if (e.kind == Event::Kind::Allocate && e.agent != 0)
            cuts.push_back(e.pieces.intervals().back().hi);
    REQUIRE(cuts.size() == 2);
    CHECK(cuts[0] == R(5, 9));
    CHECK(cuts[1] == R(47, 72));
}

TEST_CASE("three blocks under mark and choose") {
    RunResult res = run_online_mark_and_choose(fixtures::three_blocks());
    CHECK(res.division.shares[0] == span(2, 3, 5, 6));
    CHECK(res.division.shares[1] ==
          PieceSet({Interval(R(7, 12), R(2, 3)), Interval(R(5, 6), R(1))}));
    CHECK(res.division.shares[2] == span(0, 1, 7, 12));
    CHECK(res.division.partitions_unit());
}

TEST_CASE("four agent counterexample produces quarters under all online procedures") {
    Instance inst = fixtures::four_agent_counterexample();
    Division quarters{{span(0, 1, 1, 4), span(1, 4, 1, 2), span(1, 2, 3, 4), span(3, 4, 1, 1)}};
    CHECK(run_online_cut_and_choose(inst).division == quarters);
    CHECK(run_online_moving_knife(inst, 2).division == quarters);
    CHECK(run_online_mark_and_choose(inst).division == quarters);
}

TEST_CASE("scripted over-cut wins a bigger slice in cut and choose") {
    Instance inst = fixtures::four_agent_counterexample();
    Strategy strat;
    strat.overrides[1].cut_target = R(1);
    RunResult res = run_online_cut_and_choose(inst, strat);
    CHECK(res.division.shares[1] == span(1, 4, 5, 8));
    CHECK(inst.v(1).value(res.division.shares[1]) == R(1));
    CHECK(R(1) > R(1, 3)); // honest play got agent 2 exactly 1/3
}

TEST_CASE("scripted marks win a bigger slice in mark and choose") {
    Instance inst = fixtures::four_agent_counterexample();
    Strategy strat;
    strat.overrides[1].marks = std::vector<PieceSet>{span(1, 4, 5, 8), span(5, 8, 3, 4),
                                                     span(3, 4, 1, 1)};
    RunResult res = run_online_mark_and_choose(inst, strat);
    CHECK(res.division.shares[1] == span(1, 4, 5, 8));
    CHECK(inst.v(1).value(res.division.shares[1]) == R(1));
}

TEST_CASE("invalid overrides raise protocol errors") {
    Instance inst = fixtures::four_agent_counterexample();
    Strategy over;
    over.overrides[1].cut_target = R(2); // more value than exists
    CHECK_THROWS_AS(run_online_cut_and_choose(inst, over), protocol_error);

    Strategy bad_marks;
    bad_marks.overrides[0].marks = std::vector<PieceSet>{span(0, 1, 1, 2), span(1, 2, 1, 1)};
    CHECK_THROWS_AS(run_online_mark_and_choose(inst, bad_marks), protocol_error); // wrong count

    Strategy overlap;
    overlap.overrides[0].marks = std::vector<PieceSet>{span(0, 1, 1, 2), span(0, 1, 1, 2),
                                                       span(1, 2, 3, 4), span(3, 4, 1, 1)};
    CHECK_THROWS_AS(run_online_mark_and_choose(inst, overlap), protocol_error);

    Strategy out_of_range;
    out_of_range.overrides[1].give_piece = 9;
    CHECK_THROWS_AS(run_online_mark_and_choose(inst, out_of_range), protocol_error);
}

TEST_CASE("moving knife room validation") {
    Instance inst = fixtures::three_blocks();
    CHECK_THROWS_AS(run_online_moving_knife(inst, 1), domain_error);
    CHECK_THROWS_AS(run_online_moving_knife(inst, 4), domain_error);
    CHECK_NOTHROW(run_online_moving_knife(inst, 3));
}

TEST_CASE("offline cut and choose on the three block instance") {
    Instance inst = fixtures::unbounded_cc_instance();
    RunResult res = run_offline_cut_and_choose(inst);
    // agent 1 cuts [0,2/3]; agent 3 values it most (at 1) and takes it
    CHECK(res.division.shares[2] == span(0, 1, 2, 3));
    // agent 1 then keeps its own cut [2/3,5/6] since agent 2 values it less
    CHECK(res.division.shares[0] == span(2, 3, 5, 6));
    CHECK(res.division.shares[1] == span(5, 6, 1, 1));
    Rat worst = R(1);
    for (int i = 0; i < 3; ++i)
        worst = min(worst, inst.v(i).value(res.division.shares[i]));
    CHECK(worst == R(1, 4));
}

TEST_CASE("offline moving knife is the online one with a full room") {
    Instance inst = fixtures::four_agent_counterexample();
    CHECK(run_offline_moving_knife(inst).division ==
          run_online_moving_knife(inst, inst.n()).division);
}

TEST_CASE("dispatch matches the direct entry points") {
    Instance inst = fixtures::three_blocks();
    CHECK(replay_with_strategy(inst, Procedure::OnlineCutAndChoose, {}).division ==
          run_online_cut_and_choose(inst).division);
    CHECK(replay_with_strategy(inst, Procedure::OnlineMovingKnife, {}, 2).division ==
          run_online_moving_knife(inst, 2).division);
    CHECK(replay_with_strategy(inst, Procedure::OnlineMarkAndChoose, {}).division ==
          run_online_mark_and_choose(inst).division);
    CHECK(replay_with_strategy(inst, Procedure::OfflineCutAndChoose, {}).division ==
          run_offline_cut_and_choose(inst).division);
    CHECK(replay_with_strategy(inst, Procedure::OfflineMovingKnife, {}).division ==
          run_offline_moving_knife(inst).division);
}

TEST_CASE("runs are deterministic and conserve the cake") {
    const std::vector<Procedure> procs{Procedure::OnlineCutAndChoose,
                                       Procedure::OnlineMovingKnife,
                                       Procedure::OnlineMarkAndChoose,
                                       Procedure::OfflineCutAndChoose,
                                       Procedure::OfflineMovingKnife};
    for (int n : {2, 3, 5, 8}) {
        for (int trial = 0; trial < 20; ++trial) {
            GeneratorConfig cfg{n, 6, 42, 1000000};
            Instance inst = generate_instance(cfg, static_cast<std::uint64_t>(trial));
            for (Procedure p : procs) {
                RunResult a = replay_with_strategy(inst, p, {});
                RunResult b = replay_with_strategy(inst, p, {});
                CHECK(a.division == b.division);
                CHECK(a.trace == b.trace);
                CHECK(a.division.partitions_unit());

                // every agent arrives, is allocated once, and departs
                for (int i = 0; i < n; ++i) {
                    CHECK(a.trace.find(Event::Kind::Arrive, i) >= 0);
                    CHECK(a.trace.find(Event::Kind::Allocate, i) >= 0);
                    CHECK(a.trace.find(Event::Kind::Depart, i) >= 0);
                }

                // the first agent of an online run gets at least 1/n
                if (is_online(p))
                    CHECK(inst.v(0).value(a.division.shares[0]) >= Rat(1, n));
            }
        }
    }
}

TEST_CASE("cut and choose slices match the cutter's current fair share") {
    for (int trial = 0; trial < 20; ++trial) {
        GeneratorConfig cfg{6, 8, 17, 1000000};
        Instance inst = generate_instance(cfg, static_cast<std::uint64_t>(trial));
        RunResult res = run_online_cut_and_choose(inst);
        PieceSet remaining = PieceSet::unit();
        int unallocated = inst.n();
        for (const auto& e : res.trace.events) {
            if (e.kind == Event::Kind::Cut)
                CHECK(inst.v(e.agent).value(e.pieces) ==
                      inst.v(e.agent).value(remaining) / Rat(unallocated));
            if (e.kind == Event::Kind::Allocate) {
                remaining = complement(remaining, e.pieces);
                --unallocated;
            }
        }
    }
}
