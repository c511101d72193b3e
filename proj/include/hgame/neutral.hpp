#pragma once

#include "hgame/budget.hpp"
#include "hgame/preferences.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace hgame {

// Some coalition C such that every member i has score_C(i) better than
// cur[i] (strict) or at least cur[i] with one member strictly better (weak).
// Only agents in `allowed` may join. Existence only; no minimality.
std::optional<Coalition> search_block(const GameInstance& g, const std::vector<Score>& cur, bool weak,
                                      Budget& budget, const Bits* allowed = nullptr);

// Lexicographically first block of minimum size when the candidate core is
// small; otherwise an inclusion-minimal block.
std::optional<BlockingCertificate> find_blocking_neutral(const GameInstance& g, const Partition& p,
                                                         bool weak, Budget& budget);
std::optional<BlockingCertificate> find_blocking_neutral(const GameInstance& g, const Partition& p,
                                                         bool weak);

struct NeutralSearchOptions {
    std::optional<int> max_partitions;
    std::optional<int> max_coalition;
    // Called for every coalition the search places into a partial partition.
    std::function<void(const Coalition&)> on_coalition;
};

std::optional<Partition> exists_ce_neutral(const GameInstance& g, Budget& budget,
                                           const NeutralSearchOptions& opt = {});
std::optional<Partition> exists_sce_neutral(const GameInstance& g, Budget& budget,
                                            const NeutralSearchOptions& opt = {});

std::optional<Partition> exists_ce_neutral_bounded(const GameInstance& g, std::optional<int> max_partitions,
                                                   std::optional<int> max_coalition, Budget& budget);
std::optional<Partition> exists_sce_neutral_bounded(const GameInstance& g, std::optional<int> max_partitions,
                                                    std::optional<int> max_coalition, Budget& budget);

// Classes of agents that relate identically to every third agent.
std::vector<std::vector<int>> twin_classes(const GameInstance& g);

}  // namespace hgame
