#pragma once

// Executable versions of the hardness reductions, plus random instances.
// Every generator records a structured name per agent so gadgets can be
// debugged from the serialized file.

#include "hgame/graph.hpp"
#include "hgame/model.hpp"
#include "hgame/sources.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hgame {

struct Gadget {
    GameInstance game;
    std::optional<Partition> partition;  // initial partition for verification gadgets
    std::vector<std::string> names;      // names[id]
    // Explicit 2-colouring of G^f ∪ G^e, when the construction claims one.
    std::optional<std::vector<int>> sides;

    int id(const std::string& name) const;  // throws MissingAgent
};

// Name side-map as comment lines, followed by the instance itself.
std::string serialize_gadget(const Gadget& g);

// 20 agents, no core stable partition.
Gadget gen_fig2();

// k-colouring -> CE with at most k coalitions. Input degree ≤ 4.
Gadget gen_3col_to_ce3(const UGraph& graph, int k_partitions = 3);

// Friendship graph isomorphic to the input; Complete mode.
Gadget gen_tripack_to_sce(const UGraph& graph);
// Every vertex has degree 4 and its neighbourhood induces 2K2 or K_{1,3}.
bool tripack_compliant(const UGraph& graph);

// 3SAT (each literal ≤ 2 occurrences) -> CV, or SCV with strict_variant.
Gadget gen_3sat_to_cv(const CnfFormula& f, bool strict_variant);

// Independent set of size k on a graph of max degree 3 -> CV/SCV with three
// initial coalitions of equal size. Pads isolated vertices while k ≤ 3|V|/4.
struct IsGadget {
    Gadget gadget;
    UGraph graph;  // padded input
    int k = 0;     // padded target
};
IsGadget gen_is_to_cv3(const UGraph& graph, int k);

// 3SAT with every literal exactly twice -> neutral CE.
Gadget gen_3sat_to_ce_neutral(const CnfFormula& f);
// The partition the (only if) direction builds from an assignment: the false
// literal shields its variable blocker, the true literal joins the doors of
// both clauses it occurs in. Core stable iff the assignment satisfies f;
// clauses left unsatisfied get the one-door pattern with an empty door.
Partition ce_neutral_partition(const Gadget& g, const CnfFormula& f, const std::vector<bool>& assignment);

enum class X3cVariant { TwoPartitions, SmallCoalitions };
Gadget gen_x3c_to_sce_neutral(const X3cInstance& x);
Gadget gen_x3c_to_cv_neutral(const X3cInstance& x, X3cVariant v);
Gadget gen_x3c_to_scv_neutral(const X3cInstance& x, X3cVariant v);

// Pairs (i, j), i < j, visited in lexicographic order; each pair consumes one
// 64-bit draw u from mt19937_64(seed), mapped to [0,1) as (u >> 11) * 2^-53.
// u < p_friend: friends; else u < p_friend + p_enemy: enemies; else neutral.
// Complete mode ignores p_enemy (it is 1 - p_friend).
GameInstance gen_random(int n, double p_friend, double p_enemy, std::uint64_t seed,
                        Mode mode = Mode::WithNeutrals);

}  // namespace hgame
