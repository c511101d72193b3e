#pragma once

#include "hgame/budget.hpp"
#include "hgame/graph.hpp"
#include "hgame/preferences.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace hgame {

enum class Strategy {
    Generic,
    IntervalFriend,
    IntervalEnemy,
    BipartiteFriend,
    BipartiteEnemy,
    EnemyDegree2,
    FriendDegree3,
};
const char* to_string(Strategy s);

enum class Problem { CF, CV, SCE, SCV };

// levels[k] = X_k for k = 1..n (levels[0] unused and empty).
struct LevelSets {
    std::vector<Coalition> levels;
};

struct SolveReport {
    enum class Answer { Yes, No, NoWithReason } answer = Answer::No;
    std::optional<Partition> partition;             // witness for Yes
    std::optional<BlockingCertificate> certificate; // block found by a verifier
    Strategy strategy = Strategy::Generic;
    std::string reason;
    std::chrono::microseconds elapsed{0};
};

Partition solve_cf(const GameInstance& g);
Partition solve_cf(const GameInstance& g, Strategy s);

std::optional<BlockingCertificate> verify_cv(const GameInstance& g, const Partition& p);
std::optional<BlockingCertificate> verify_scv(const GameInstance& g, const Partition& p);

LevelSets compute_levels(const GameInstance& g);
LevelSets compute_levels(const GameInstance& g, Strategy s);

std::optional<Partition> exists_sce(const GameInstance& g);
std::optional<Partition> exists_sce(const GameInstance& g, Strategy s);

std::optional<Partition> exists_ce_bounded_coalition(const GameInstance& g, int k);
std::optional<Partition> exists_sce_bounded_coalition(const GameInstance& g, int k);
// Generic variant of the above (no matching shortcut for k = 2).
std::optional<Partition> exists_sce_bounded_coalition_generic(const GameInstance& g, int k);

std::optional<Partition> exists_ce_bounded_partitions(const GameInstance& g, int k, Budget& budget);
std::optional<Partition> exists_sce_bounded_partitions(const GameInstance& g, int k, Budget& budget);
// Exhaustive search regardless of k (used to cross-check the k <= 2 shortcut).
std::optional<Partition> exists_ce_bounded_partitions_search(const GameInstance& g, int k,
                                                             Budget& budget);

bool sce_enemy_degree2(const GameInstance& g);

Strategy dispatch_strategy(const GameInstance& g, Problem problem);
// Every strategy whose preconditions hold for this instance and problem.
std::vector<Strategy> applicable_strategies(const GameInstance& g, Problem problem);

}  // namespace hgame
