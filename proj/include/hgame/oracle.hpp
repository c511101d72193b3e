#pragma once

// Brute-force ground truth. Deliberately naive; guarded by size limits that
// raise SizeGuard instead of truncating.

#include "hgame/model.hpp"
#include "hgame/sources.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hgame {

inline constexpr int kMaxPartitionAgents = 12;
inline constexpr int kMaxSubsetAgents = 20;

std::uint64_t bell_number(int n);

// Restricted-growth strings in lexicographic order; return false from f to stop.
void for_each_partition(int n, const std::function<bool(const Partition&)>& f);
std::vector<Partition> all_partitions(int n);

// First (weakly, if strict_core) blocking coalition in canonical order
// (size, then lexicographic); nullopt iff (strictly) core stable.
std::optional<Coalition> brute_stability(const GameInstance& g, const Partition& p, bool strict_core);

struct BruteBounds {
    std::optional<int> max_partitions;
    std::optional<int> max_coalition;
};
// First stable partition in restricted-growth order.
std::optional<Partition> brute_exists(const GameInstance& g, bool strict_core, BruteBounds b = {});

std::optional<std::vector<bool>> brute_sat3(const CnfFormula& f);
std::optional<std::vector<int>> brute_3coloring(const UGraph& g);
std::optional<std::vector<Coalition>> brute_triangle_partition(const UGraph& g);
std::optional<std::vector<int>> brute_exact_cover(const X3cInstance& x);
std::optional<Coalition> brute_independent_set(const UGraph& g, int k);

}  // namespace hgame
