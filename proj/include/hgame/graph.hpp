#pragma once

#include "hgame/model.hpp"

#include <optional>
#include <vector>

namespace hgame {

struct UGraph {
    int n = 0;
    std::vector<Bits> adj;

    UGraph() = default;
    explicit UGraph(int n_) : n(n_), adj(n_, Bits(n_)) {}

    void add_edge(int u, int v)
    {
        adj[u].set(v);
        adj[v].set(u);
    }
    bool has_edge(int u, int v) const { return adj[u][v]; }
    int degree(int v) const { return int(adj[v].count()); }
    int max_degree() const;
    Bits all() const { return ~Bits(n); }
    UGraph complement() const;
    std::vector<Edge> edges() const;
    static UGraph from_edges(int n, const std::vector<Edge>& edges);
};

UGraph friend_graph(const GameInstance& g);
UGraph enemy_graph(const GameInstance& g);

// Maximum clique; among those, the lexicographically smallest sorted member list.
Coalition max_clique(const UGraph& g);
Coalition max_clique(const UGraph& g, const Bits& within);
int clique_number(const UGraph& g, const Bits& within);

// A clique of exactly k vertices (inside `within`, through `through` if given).
std::optional<Coalition> has_clique_of_size(const UGraph& g, int k,
                                            std::optional<int> through = std::nullopt);
std::optional<Coalition> has_clique_of_size(const UGraph& g, int k, std::optional<int> through,
                                            const Bits& within);

std::optional<std::vector<Coalition>> partition_into_cliques_of_size(const UGraph& g, int k);
std::optional<std::vector<Coalition>> partition_into_cliques_of_size(const UGraph& g, int k,
                                                                     const Bits& within);

std::vector<Edge> max_matching(const UGraph& g);
std::vector<Edge> max_matching(const UGraph& g, const Bits& within);

std::optional<std::vector<int>> k_coloring(const UGraph& g, int k);
std::optional<std::vector<int>> k_coloring(const UGraph& g, int k, const Bits& within);

struct BipartitionResult {
    std::optional<std::vector<int>> side;  // 0/1 per vertex (vertices outside `within`: -1)
    std::vector<int> odd_cycle;            // closed walk v0..vk with v0 == vk when not bipartite
};
BipartitionResult bipartition(const UGraph& g);
BipartitionResult bipartition(const UGraph& g, const Bits& within);

// Throws RepMismatch if the intervals do not represent g.
void check_interval_rep(const UGraph& g, const IntervalRep& rep);
std::optional<std::vector<Coalition>> interval_clique_partition(const IntervalRep& rep, int k);
std::optional<std::vector<Coalition>> interval_clique_partition(const IntervalRep& rep, int k,
                                                                const Bits& within);
std::optional<std::vector<int>> interval_coloring(const IntervalRep& rep, int k);
// Largest clique through each vertex, restricted to `within` (0 outside).
std::vector<int> interval_clique_through(const IntervalRep& rep, const Bits& within);
Coalition interval_max_clique(const IntervalRep& rep, const Bits& within);

struct Component {
    enum Kind { Singleton, Path, Cycle } kind;
    std::vector<int> order;  // walk order along the path or cycle
    bool operator==(const Component&) const = default;
};
std::vector<Component> degree2_decompose(const UGraph& g);
Coalition max_is_degree2(const UGraph& g);

std::vector<std::vector<int>> connected_components(const UGraph& g, const Bits& within);

}  // namespace hgame
