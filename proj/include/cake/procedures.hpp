#pragma once

#include "cake/strategy.hpp"
#include "cake/trace.hpp"

#include <string>

namespace cake {

enum class Procedure { OnlineCutAndChoose, OnlineMovingKnife, OnlineMarkAndChoose,
                       OfflineCutAndChoose, OfflineMovingKnife };

/// Short names used by the CLI and batch CSVs: occ, omk, omc, cc, mk.
Procedure procedure_from_name(const std::string& name);
std::string procedure_name(Procedure p);
bool is_online(Procedure p);
/// The offline procedure an online one is measured against.
Procedure offline_counterpart(Procedure p);

RunResult run_online_cut_and_choose(const Instance& inst, const Strategy& strat = {});
RunResult run_online_moving_knife(const Instance& inst, int room = 2, const Strategy& strat = {});
RunResult run_online_mark_and_choose(const Instance& inst, const Strategy& strat = {});
RunResult run_offline_cut_and_choose(const Instance& inst);
RunResult run_offline_moving_knife(const Instance& inst);

/// Dispatch by procedure id with strategy overrides (offline procedures
/// ignore the strategy; room applies to the online moving knife only).
RunResult replay_with_strategy(const Instance& inst, Procedure p, const Strategy& strat,
                               int room = 2);

/// One Dubins-Spanier round over `region` among `agents`: each agent's stop
/// position targets 1/denom of their value of the region (unless overridden);
/// earliest arrival wins ties. Returns the winner and the slice taken.
/// Shared by the moving-knife engines and the collusion split.
struct KnifeRound {
    int winner;       // index into `agents`
    PieceSet slice;   // region up to the winning stop
    std::vector<Rat> stops;
};
KnifeRound moving_knife_round(const PieceSet& region, const Instance& inst,
                              const std::vector<int>& agents, int denom,
                              const Strategy& strat = {});

} // namespace cake
