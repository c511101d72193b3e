#pragma once

// Instance families and independent checks shared by the unit tests and the
// acceptance runner. Nothing here calls a solver under test.

#include "hgame/generators.hpp"
#include "hgame/graph.hpp"
#include "hgame/oracle.hpp"
#include "hgame/preferences.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hgame::testing {

using Rng = std::mt19937_64;

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline double uniform(Rng& r) { return std::uniform_real_distribution<double>(0, 1)(r); }
inline int pick(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }

inline GameInstance complete_from_friends(int n, const std::vector<Edge>& f)
{
    return GameInstance::build(n, f, {}, Mode::Complete);
}

inline GameInstance complete_from_enemies(int n, const std::vector<Edge>& e)
{
    std::vector<Edge> f;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::find(e.begin(), e.end(), Edge{i, j}) == e.end()) f.push_back({i, j});
    return complete_from_friends(n, f);
}

inline GameInstance random_complete(Rng& r, int n)
{
    return gen_random(n, uniform(r), 0, r(), Mode::Complete);
}

inline GameInstance random_neutral(Rng& r, int n)
{
    double pf = uniform(r), pe = uniform(r) * (1 - pf);
    return gen_random(n, pf, pe, r(), Mode::WithNeutrals);
}

inline Partition random_partition(Rng& r, int n)
{
    int k = pick(r, 1, std::max(1, n));
    Partition p;
    p.coalitions.resize(k);
    for (int i = 0; i < n; ++i) p.coalitions[pick(r, 0, k - 1)].push_back(i);
    std::erase_if(p.coalitions, [](const Coalition& c) { return c.empty(); });
    p.canonicalize();
    return p;
}

// Greedy random partition into friendship cliques (more likely stable).
inline Partition random_clique_partition(Rng& r, const GameInstance& g)
{
    std::vector<int> order(g.size());
    for (int i = 0; i < g.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), r);
    Partition p;
    for (int a : order) {
        bool placed = false;
        for (auto& c : p.coalitions)
            if (std::all_of(c.begin(), c.end(), [&](int b) { return g.friends(a, b); })) {
                c.push_back(a);
                placed = true;
                break;
            }
        if (!placed) p.coalitions.push_back({a});
    }
    p.canonicalize();
    return p;
}

// ---- special classes -----------------------------------------------------

inline std::vector<Edge> random_bipartite_edges(Rng& r, int n, double p)
{
    std::vector<int> side(n);
    for (auto& s : side) s = pick(r, 0, 1);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (side[i] != side[j] && uniform(r) < p) e.push_back({i, j});
    return e;
}

// Disjoint paths and cycles.
inline std::vector<Edge> random_degree2_edges(Rng& r, int n)
{
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), r);
    std::vector<Edge> e;
    for (int at = 0; at < n;) {
        int len = pick(r, 1, std::min(n - at, 6));
        for (int k = 0; k + 1 < len; ++k) e.push_back(std::minmax(order[at + k], order[at + k + 1]));
        if (len >= 3 && pick(r, 0, 1)) e.push_back(std::minmax(order[at], order[at + len - 1]));
        at += len;
    }
    return e;
}

inline std::vector<Edge> random_max_degree_edges(Rng& r, int n, int d, double p)
{
    std::vector<int> deg(n, 0);
    std::vector<Edge> all, e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    std::shuffle(all.begin(), all.end(), r);
    for (auto [i, j] : all)
        if (deg[i] < d && deg[j] < d && uniform(r) < p) {
            e.push_back({i, j});
            ++deg[i];
            ++deg[j];
        }
    std::sort(e.begin(), e.end());
    return e;
}

// Random closed intervals with small integer endpoints; the represented graph
// is the friendship graph (friends = true) or the enemy graph.
inline GameInstance random_interval_instance(Rng& r, int n, bool friends)
{
    IntervalRep rep(n);
    int span = pick(r, n, 3 * n);
    for (auto& iv : rep) {
        int lo = pick(r, 0, span), len = pick(r, 0, std::max(1, span / 3));
        iv = Interval{Rational(lo), Rational(lo + len)};
    }
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rep[i].lo <= rep[j].hi && rep[j].lo <= rep[i].hi) e.push_back({i, j});
    GameInstance g = friends ? complete_from_friends(n, e) : complete_from_enemies(n, e);
    g.set_intervals(rep);
    return g;
}

// ---- independent checks --------------------------------------------------

inline int brute_clique_number(const GameInstance& g)
{
    int n = g.size(), best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int c = std::popcount(s);
        if (c <= best) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((s >> i & 1) && (s >> j & 1) && !g.friends(i, j)) ok = false;
        if (ok) best = c;
    }
    return best;
}

struct InvariantTally {
    long checked = 0;
    long violations = 0;
    std::string first_violation;
};

inline InvariantTally& tally()
{
    static InvariantTally t;
    return t;
}

// Stable partitions of Complete instances are partitions into friendship
// cliques, their largest coalition is a maximum clique, and they have at most
// Δ^e + 1 coalitions. Records the result in tally().
inline bool check_stable_structure(const GameInstance& g, const Partition& p)
{
    if (g.mode() != Mode::Complete) return true;
    auto& t = tally();
    ++t.checked;
    std::string why;
    for (const auto& c : p.coalitions)
        for (std::size_t i = 0; i < c.size() && why.empty(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!g.friends(c[i], c[j])) {
                    why = "coalition is not a friendship clique";
                    break;
                }
    int omega = g.size() <= 20 ? brute_clique_number(g) : int(max_clique(friend_graph(g)).size());
    if (why.empty() && int(p.max_size()) != omega) why = "largest coalition is not a maximum clique";
    int de = 0;
    for (int i = 0; i < g.size(); ++i) de = std::max(de, int(g.enemy_list(i).size()));
    if (why.empty() && int(p.coalitions.size()) > de + 1) why = "more than Δ^e + 1 coalitions";
    if (!why.empty()) {
        if (!t.violations++) t.first_violation = why + "\n" + serialize_instance(g) + serialize_partition(p);
        return false;
    }
    return true;
}

inline bool satisfies(const CnfFormula& f, const std::vector<bool>& a)
{
    return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](int l) { return (l > 0) == a[std::abs(l) - 1]; });
    });
}

// Formula with every literal exactly twice; n divisible by 3.
inline CnfFormula random_twice_formula(Rng& r, int n)
{
    std::vector<int> slots;
    for (int v = 1; v <= n; ++v)
        for (int k = 0; k < 2; ++k) {
            slots.push_back(v);
            slots.push_back(-v);
        }
    int m = int(slots.size()) / 3;
    while (true) {
        std::shuffle(slots.begin(), slots.end(), r);
        CnfFormula f{n, {}};
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            std::array<int, 3> c{slots[3 * j], slots[3 * j + 1], slots[3 * j + 2]};
            if (std::abs(c[0]) == std::abs(c[1]) || std::abs(c[0]) == std::abs(c[2]) ||
                std::abs(c[1]) == std::abs(c[2]))
                ok = false;
            f.clauses.push_back(c);
        }
        if (ok) return f;
    }
}

// Random formula with every literal at most twice.
inline CnfFormula random_at_most_twice_formula(Rng& r, int n, int m)
{
    std::vector<int> slots;
    for (int v = 1; v <= n; ++v)
        for (int k = 0; k < 2; ++k) {
            slots.push_back(v);
            slots.push_back(-v);
        }
    while (true) {
        std::shuffle(slots.begin(), slots.end(), r);
        CnfFormula f{n, {}};
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            std::array<int, 3> c{slots[3 * j], slots[3 * j + 1], slots[3 * j + 2]};
            if (std::abs(c[0]) == std::abs(c[1]) || std::abs(c[0]) == std::abs(c[2]) ||
                std::abs(c[1]) == std::abs(c[2]))
                ok = false;
            f.clauses.push_back(c);
        }
        if (ok) return f;
    }
}

// Random X3C instance with element frequency ≤ 3.
inline X3cInstance random_x3c(Rng& r, int n, int m)
{
    while (true) {
        X3cInstance x{3 * n, {}};
        std::vector<int> freq(3 * n, 0);
        int tries = 0;
        while (int(x.sets.size()) < m && tries++ < 200) {
            std::vector<int> e(3 * n);
            for (int i = 0; i < 3 * n; ++i) e[i] = i;
            std::shuffle(e.begin(), e.end(), r);
            std::array<int, 3> s{e[0], e[1], e[2]};
            if (freq[s[0]] >= 3 || freq[s[1]] >= 3 || freq[s[2]] >= 3) continue;
            std::sort(s.begin(), s.end());
            for (int v : s) ++freq[v];
            x.sets.push_back(s);
        }
        if (int(x.sets.size()) == m) return x;
    }
}

inline UGraph relabel(const UGraph& g, Rng& r)
{
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), r);
    UGraph h(g.n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace hgame::testing
