#include "hgame/core.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace hgame {

const char* to_string(Strategy s)
{
    switch (s) {
    case Strategy::Generic: return "generic";
    case Strategy::IntervalFriend: return "interval-friend";
    case Strategy::IntervalEnemy: return "interval-enemy";
    case Strategy::BipartiteFriend: return "bipartite-friend";
    case Strategy::BipartiteEnemy: return "bipartite-enemy";
    case Strategy::EnemyDegree2: return "enemy-degree2";
    case Strategy::FriendDegree3: return "friend-degree3";
    }
    return "?";
}

namespace {

void require_complete(const GameInstance& g)
{
    if (g.mode() != Mode::Complete)
        throw Error(ErrorKind::ModeMismatch, "operation requires a complete-mode instance");
}

Bits above(int n, int v)
{
    Bits b(n);
    if (v + 1 < n) b.set(v + 1, n - v - 1, true);
    return b;
}

std::vector<int> members(const Bits& b)
{
    std::vector<int> v;
    for (auto x = b.find_first(); x != Bits::npos; x = b.find_next(x)) v.push_back(int(x));
    return v;
}

Partition make_partition(std::vector<Coalition> cs)
{
    Partition p;
    for (auto& c : cs)
        if (!c.empty()) p.coalitions.push_back(std::move(c));
    p.canonicalize();
    return p;
}

// ---- bipartite enemy graph: cliques of G^f are independent sets of G^e (König)

int bip_alpha(const UGraph& ge, const Bits& S)
{
    if (S.none()) return 0;
    return int(S.count()) - int(max_matching(ge, S).size());
}

Bits closed_nbhd(const UGraph& g, int v)
{
    Bits b = g.adj[v];
    b.set(v);
    return b;
}

// ---- interval enemy graph: independent sets by earliest right end

int interval_mis(const IntervalRep& rep, std::vector<int> verts)
{
    std::sort(verts.begin(), verts.end(), [&](int a, int b) { return rep[a].hi < rep[b].hi; });
    int cnt = 0;
    std::optional<Rational> last;
    for (int v : verts)
        if (!last || *last < rep[v].lo) {
            ++cnt;
            last = rep[v].hi;
        }
    return cnt;
}

bool interval_rep_for(const GameInstance& g, IntervalTarget t)
{
    if (!g.intervals()) return false;
    return interval_target(g) == t;
}

// ---- level computation

using ThroughFn = std::function<std::vector<int>(const Bits&)>;

// Largest clique through each vertex of V' (0 outside); X_k = argmax.
LevelSets levels_by_through(int n, const ThroughFn& through)
{
    LevelSets ls;
    ls.levels.assign(std::size_t(n) + 1, {});
    Bits rest(n);
    rest.set();
    while (rest.any()) {
        auto t = through(rest);
        int k = 0;
        for (auto v = rest.find_first(); v != Bits::npos; v = rest.find_next(v)) k = std::max(k, t[v]);
        for (auto v = rest.find_first(); v != Bits::npos; v = rest.find_next(v))
            if (t[v] == k) ls.levels[k].push_back(int(v));
        for (int v : ls.levels[k]) rest.reset(v);
    }
    return ls;
}

LevelSets levels_generic(const GameInstance& g)
{
    const int n = g.size();
    UGraph gf = friend_graph(g);
    LevelSets ls;
    ls.levels.assign(std::size_t(n) + 1, {});
    Bits rest(n);
    rest.set();
    while (rest.any()) {
        int k = clique_number(gf, rest);
        Bits mark(n);
        for (auto v = rest.find_first(); v != Bits::npos; v = rest.find_next(v)) {
            if (mark[v]) continue;
            if (auto c = has_clique_of_size(gf, k, int(v), rest))
                for (int a : *c) mark.set(a);
        }
        ls.levels[k] = members(mark);
        rest -= mark;
    }
    return ls;
}

std::vector<int> through_bipartite_enemy(const UGraph& ge, const Bits& rest)
{
    std::vector<int> t(ge.n, 0);
    for (auto v = rest.find_first(); v != Bits::npos; v = rest.find_next(v))
        t[v] = 1 + bip_alpha(ge, rest - closed_nbhd(ge, int(v)));
    return t;
}

std::vector<int> through_interval_enemy(const IntervalRep& rep, const Bits& rest)
{
    std::vector<int> t(rep.size(), 0);
    auto verts = members(rest);
    for (int v : verts) {
        std::vector<int> left, right;
        for (int u : verts) {
            if (rep[u].hi < rep[v].lo) left.push_back(u);
            else if (rep[v].hi < rep[u].lo) right.push_back(u);
        }
        t[v] = 1 + interval_mis(rep, left) + interval_mis(rep, right);
    }
    return t;
}

std::vector<int> through_friend_degree3(const UGraph& gf, const Bits& rest)
{
    std::vector<int> t(gf.n, 0);
    for (auto v = rest.find_first(); v != Bits::npos; v = rest.find_next(v)) {
        auto nb = members(gf.adj[v] & rest);
        int best = 0;
        for (unsigned mask = 0; mask < (1u << nb.size()); ++mask) {
            bool ok = true;
            for (std::size_t i = 0; i < nb.size() && ok; ++i)
                for (std::size_t j = i + 1; j < nb.size() && ok; ++j)
                    if ((mask >> i & 1) && (mask >> j & 1) && !gf.has_edge(nb[i], nb[j])) ok = false;
            if (ok) best = std::max(best, __builtin_popcount(mask));
        }
        t[v] = 1 + best;
    }
    return t;
}

// Partition X_k into k-cliques of G^f according to the strategy.
std::optional<std::vector<Coalition>> split_level(const GameInstance& g, Strategy s, int k,
                                                  const Coalition& xk)
{
    const int n = g.size();
    Bits X = to_bits(xk, n);
    if (xk.size() % std::size_t(k) != 0) return std::nullopt;
    switch (s) {
    case Strategy::IntervalFriend:
        return interval_clique_partition(*g.intervals(), k, X);
    case Strategy::IntervalEnemy: {
        // colour G^e[X_k] with |X_k|/k colours; classes are then forced to size k
        const auto& rep = *g.intervals();
        IntervalRep sub;
        for (int v : xk) sub.push_back(rep[v]);
        int c = int(xk.size()) / k;
        auto col = interval_coloring(sub, c);
        if (!col) return std::nullopt;
        std::vector<Coalition> out(static_cast<std::size_t>(c));
        for (std::size_t i = 0; i < xk.size(); ++i) out[(*col)[i]].push_back(xk[i]);
        for (auto& cl : out)
            if (int(cl.size()) != k) return std::nullopt;
        return out;
    }
    case Strategy::BipartiteFriend: {
        if (k == 1) {
            std::vector<Coalition> out;
            for (int v : xk) out.push_back({v});
            return out;
        }
        auto m = max_matching(friend_graph(g), X);
        if (m.size() * 2 != xk.size()) return std::nullopt;
        std::vector<Coalition> out;
        for (auto [u, v] : m) out.push_back({u, v});
        return out;
    }
    case Strategy::BipartiteEnemy: {
        // a partition into c cliques of G^f is a proper c-colouring of G^e[X_k];
        // levels of a bipartite enemy graph hold at most 2k agents
        std::size_t c = xk.size() / std::size_t(k);
        if (c == 1) {
            if (!is_enemy_free(g, xk)) return std::nullopt;
            return std::vector<Coalition>{xk};
        }
        if (c != 2) return std::nullopt;
        UGraph ge = enemy_graph(g);
        auto bp = bipartition(ge, X);
        if (!bp.side) return std::nullopt;
        auto comps = connected_components(ge, X);
        // subset sum: pick per component which side joins the first coalition
        std::vector<std::array<int, 2>> cnt(comps.size(), {0, 0});
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (int v : comps[i]) ++cnt[i][(*bp.side)[v]];
        std::vector<std::vector<signed char>> choice(comps.size() + 1,
                                                     std::vector<signed char>(std::size_t(k) + 1, -1));
        std::vector<std::vector<char>> reach(comps.size() + 1, std::vector<char>(std::size_t(k) + 1, 0));
        reach[0][0] = 1;
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (int s0 = 0; s0 <= k; ++s0) {
                if (!reach[i][s0]) continue;
                for (int side = 0; side < 2; ++side) {
                    int s1 = s0 + cnt[i][side];
                    if (s1 <= k && !reach[i + 1][s1]) {
                        reach[i + 1][s1] = 1;
                        choice[i + 1][s1] = static_cast<signed char>(side);
                    }
                }
            }
        if (!reach[comps.size()][k]) return std::nullopt;
        std::vector<Coalition> out(2);
        int s1 = k;
        for (std::size_t i = comps.size(); i > 0; --i) {
            int side = choice[i][s1];
            for (int v : comps[i - 1]) out[(*bp.side)[v] == side ? 0 : 1].push_back(v);
            s1 -= cnt[i - 1][side];
        }
        for (auto& cl : out) std::sort(cl.begin(), cl.end());
        return out;
    }
    default:
        return partition_into_cliques_of_size(friend_graph(g), k, X);
    }
}

bool applies(const GameInstance& g, Strategy s, Problem problem)
{
    if (s == Strategy::Generic) return true;
    if (g.mode() != Mode::Complete) return false;
    if (problem == Problem::CV || problem == Problem::SCV) return false;
    auto bip = [](const UGraph& u) { return bipartition(u).side.has_value(); };
    switch (s) {
    case Strategy::IntervalFriend: return interval_rep_for(g, IntervalTarget::Friends);
    case Strategy::IntervalEnemy:
        return problem == Problem::SCE && interval_rep_for(g, IntervalTarget::Enemies);
    case Strategy::BipartiteFriend: return bip(friend_graph(g));
    case Strategy::BipartiteEnemy: return bip(enemy_graph(g));
    case Strategy::EnemyDegree2: return problem == Problem::SCE && enemy_graph(g).max_degree() <= 2;
    case Strategy::FriendDegree3: return problem == Problem::SCE && friend_graph(g).max_degree() <= 3;
    default: return false;
    }
}

void require_applies(const GameInstance& g, Strategy s, Problem problem)
{
    if (!applies(g, s, problem))
        throw Error(ErrorKind::DegreeTooHigh,
                    std::string("strategy ") + to_string(s) + " does not apply to this instance");
}

// Lexicographically first maximum independent set of a bipartite graph inside R.
Coalition lexfirst_max_is_bipartite(const UGraph& ge, Bits R)
{
    int w = bip_alpha(ge, R);
    Coalition chosen;
    for (auto v = R.find_first(); v != Bits::npos && int(chosen.size()) < w;) {
        Bits Q = R & above(ge.n, int(v));
        Q -= ge.adj[v];
        if (1 + bip_alpha(ge, Q) + int(chosen.size()) >= w) {
            chosen.push_back(int(v));
            R = Q;
            v = R.find_first();
        } else {
            v = R.find_next(v);
        }
    }
    return chosen;
}

}  // namespace

// ------------------------------------------------------------------ CF

Partition solve_cf(const GameInstance& g, Strategy s)
{
    require_complete(g);
    require_applies(g, s, Problem::CF);
    const int n = g.size();
    UGraph gf = friend_graph(g);
    UGraph ge = enemy_graph(g);
    std::vector<Coalition> out;
    Bits rest(n);
    rest.set();
    while (rest.any()) {
        Coalition c;
        switch (s) {
        case Strategy::IntervalFriend: c = interval_max_clique(*g.intervals(), rest); break;
        case Strategy::BipartiteFriend: {
            // triangle-free: the first maximum clique is the first edge, else a singleton
            for (auto u = rest.find_first(); u != Bits::npos && c.empty(); u = rest.find_next(u)) {
                Bits nb = gf.adj[u] & rest;
                if (nb.any()) c = {int(u), int(nb.find_first())};
            }
            if (c.empty()) c = {int(rest.find_first())};
            break;
        }
        case Strategy::BipartiteEnemy: c = lexfirst_max_is_bipartite(ge, rest); break;
        default: c = max_clique(gf, rest); break;
        }
        for (int a : c) rest.reset(a);
        out.push_back(std::move(c));
    }
    return make_partition(std::move(out));
}

Partition solve_cf(const GameInstance& g) { return solve_cf(g, dispatch_strategy(g, Problem::CF)); }

// ------------------------------------------------------------- verifiers

namespace {

// Lowest agent with an enemy inside its own coalition.
std::optional<int> aggrieved(const GameInstance& g, const Partition& p)
{
    std::optional<int> best;
    for (const auto& c : p.coalitions) {
        Bits b = to_bits(c, g.size());
        for (int a : c)
            if ((g.enemy_row(a) & b).any() && (!best || a < *best)) best = a;
    }
    return best;
}

}  // namespace

std::optional<BlockingCertificate> verify_cv(const GameInstance& g, const Partition& p)
{
    require_complete(g);
    validate_partition(p, g.size());
    if (auto a = aggrieved(g, p)) return certify(g, p, {*a}, false);

    auto order = p.coalitions;
    for (auto& c : order) std::sort(c.begin(), c.end());
    std::stable_sort(order.begin(), order.end(), [](const Coalition& a, const Coalition& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    UGraph gf = friend_graph(g);
    Bits rest(g.size());
    rest.set();
    std::size_t last = 0;
    for (const auto& c : order) {
        // after the first coalition of a size, the same check on a smaller vertex set is redundant
        if (c.size() != last)
            if (auto b = has_clique_of_size(gf, int(c.size()) + 1, std::nullopt, rest))
                return certify(g, p, *b, false);
        last = c.size();
        for (int a : c) rest.reset(a);
    }
    return std::nullopt;
}

std::optional<BlockingCertificate> verify_scv(const GameInstance& g, const Partition& p)
{
    require_complete(g);
    validate_partition(p, g.size());
    if (auto a = aggrieved(g, p)) return certify(g, p, {*a}, true);

    // All coalitions are cliques, so an agent in a coalition of size s has
    // score (0, s-1). A clique C weakly blocks iff every member sits in a
    // coalition of size <= |C| and some member in one of size < |C|.
    const int n = g.size();
    UGraph gf = friend_graph(g);
    auto own = p.owners(n);
    std::vector<int> size_of(n);
    for (int i = 0; i < n; ++i) size_of[i] = int(p.coalitions[own[i]].size());
    std::vector<int> sizes(size_of.begin(), size_of.end());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    for (int s : sizes) {
        Bits R(n), S(n);
        for (int i = 0; i < n; ++i) {
            if (size_of[i] <= s) R.set(i);
            if (size_of[i] < s) S.set(i);
        }
        // any larger clique among agents in coalitions of size <= s blocks strictly
        if (auto b = has_clique_of_size(gf, s + 1, std::nullopt, R)) return certify(g, p, *b, true);
        for (auto v = S.find_first(); v != Bits::npos; v = S.find_next(v))
            if (auto b = has_clique_of_size(gf, s, int(v), R)) return certify(g, p, *b, true);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- levels

LevelSets compute_levels(const GameInstance& g, Strategy s)
{
    require_complete(g);
    require_applies(g, s, Problem::SCE);
    const int n = g.size();
    switch (s) {
    case Strategy::IntervalFriend: {
        const auto& rep = *g.intervals();
        return levels_by_through(n, [&](const Bits& r) { return interval_clique_through(rep, r); });
    }
    case Strategy::IntervalEnemy: {
        const auto& rep = *g.intervals();
        return levels_by_through(n, [&](const Bits& r) { return through_interval_enemy(rep, r); });
    }
    case Strategy::BipartiteFriend: {
        // triangle-free: agents with a remaining friend form X_2
        UGraph gf = friend_graph(g);
        return levels_by_through(n, [&](const Bits& r) {
            std::vector<int> t(n, 0);
            for (auto v = r.find_first(); v != Bits::npos; v = r.find_next(v))
                t[v] = (gf.adj[v] & r).any() ? 2 : 1;
            return t;
        });
    }
    case Strategy::BipartiteEnemy: {
        UGraph ge = enemy_graph(g);
        return levels_by_through(n, [&](const Bits& r) { return through_bipartite_enemy(ge, r); });
    }
    case Strategy::FriendDegree3: {
        UGraph gf = friend_graph(g);
        return levels_by_through(n, [&](const Bits& r) { return through_friend_degree3(gf, r); });
    }
    default: return levels_generic(g);
    }
}

LevelSets compute_levels(const GameInstance& g) { return compute_levels(g, Strategy::Generic); }

// ------------------------------------------------------------------- SCE

namespace {

std::optional<Partition> sce_degree2_witness(const GameInstance& g)
{
    auto comps = degree2_decompose(enemy_graph(g));
    std::vector<Coalition> out(3);
    int kind = -1;  // 0: triangles, 1: odd paths, 2: even paths/cycles
    for (const auto& c : comps) {
        std::size_t len = c.order.size();
        int k;
        if (c.kind == Component::Cycle && len == 3) k = 0;
        else if (c.kind != Component::Cycle && len % 2 == 1) k = 1;
        else if (len % 2 == 0) k = 2;
        else return std::nullopt;  // odd cycle of length >= 5
        if (kind >= 0 && kind != k) return std::nullopt;
        kind = k;
        for (std::size_t i = 0; i < len; ++i)
            out[kind == 0 ? i : i % 2].push_back(c.order[i]);
    }
    return make_partition(std::move(out));
}

}  // namespace

bool sce_enemy_degree2(const GameInstance& g)
{
    require_complete(g);
    if (enemy_graph(g).max_degree() > 2)
        throw Error(ErrorKind::DegreeTooHigh, "enemy graph has a vertex of degree > 2");
    return sce_degree2_witness(g).has_value();
}

std::optional<Partition> exists_sce(const GameInstance& g, Strategy s)
{
    require_complete(g);
    require_applies(g, s, Problem::SCE);
    if (s == Strategy::EnemyDegree2) return sce_degree2_witness(g);
    auto ls = compute_levels(g, s);
    std::vector<Coalition> out;
    for (int k = g.size(); k >= 1; --k) {
        const auto& xk = ls.levels[k];
        if (xk.empty()) continue;
        auto parts = split_level(g, s, k, xk);
        if (!parts) return std::nullopt;
        for (auto& c : *parts) out.push_back(std::move(c));
    }
    return make_partition(std::move(out));
}

std::optional<Partition> exists_sce(const GameInstance& g)
{
    return exists_sce(g, dispatch_strategy(g, Problem::SCE));
}

// --------------------------------------------------------- bounded |C|

std::optional<Partition> exists_ce_bounded_coalition(const GameInstance& g, int k)
{
    require_complete(g);
    if (has_clique_of_size(friend_graph(g), k + 1)) return std::nullopt;
    return solve_cf(g);
}

std::optional<Partition> exists_sce_bounded_coalition_generic(const GameInstance& g, int k)
{
    require_complete(g);
    if (has_clique_of_size(friend_graph(g), k + 1)) return std::nullopt;
    return exists_sce(g, Strategy::Generic);
}

std::optional<Partition> exists_sce_bounded_coalition(const GameInstance& g, int k)
{
    require_complete(g);
    if (k != 2) return exists_sce_bounded_coalition_generic(g, k);
    // triangle-free, and the agents with a friend have a perfect matching
    UGraph gf = friend_graph(g);
    if (has_clique_of_size(gf, 3)) return std::nullopt;
    Bits busy(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (gf.adj[v].any()) busy.set(v);
    auto m = max_matching(gf, busy);
    if (m.size() * 2 != busy.count()) return std::nullopt;
    std::vector<Coalition> out;
    for (auto [u, v] : m) out.push_back({u, v});
    for (int v = 0; v < g.size(); ++v)
        if (!busy[v]) out.push_back({v});
    return make_partition(std::move(out));
}

// ------------------------------------------------------- bounded |Pi|

namespace {

// Every partition of the agents into at most k enemy-free coalitions
// (colourings of G^e), first canonical colouring first; `accept` decides.
std::optional<Partition> search_colourings(const GameInstance& g, int k, Budget& budget,
                                           const std::function<bool(const Partition&)>& accept)
{
    const int n = g.size();
    std::vector<int> col(n, -1);
    std::vector<Bits> cls;
    std::optional<Partition> found;
    std::function<bool(int)> rec = [&](int v) -> bool {
        budget.tick();
        if (v == n) {
            std::vector<Coalition> cs(cls.size());
            for (int a = 0; a < n; ++a) cs[col[a]].push_back(a);
            Partition p = make_partition(std::move(cs));
            if (accept(p)) {
                found = p;
                return true;
            }
            return false;
        }
        for (std::size_t c = 0; c < cls.size(); ++c) {
            if ((cls[c] & g.enemy_row(v)).any()) continue;
            cls[c].set(v);
            col[v] = int(c);
            if (rec(v + 1)) return true;
            cls[c].reset(v);
        }
        if (int(cls.size()) < k) {
            cls.emplace_back(n);
            cls.back().set(v);
            col[v] = int(cls.size()) - 1;
            if (rec(v + 1)) return true;
            cls.pop_back();
        }
        col[v] = -1;
        return false;
    };
    if (n == 0) return Partition{};
    rec(0);
    return found;
}

}  // namespace

std::optional<Partition> exists_ce_bounded_partitions_search(const GameInstance& g, int k,
                                                             Budget& budget)
{
    require_complete(g);
    return search_colourings(g, k, budget,
                             [&](const Partition& p) { return !verify_cv(g, p).has_value(); });
}

std::optional<Partition> exists_ce_bounded_partitions(const GameInstance& g, int k, Budget& budget)
{
    require_complete(g);
    if (k < 1) return g.size() == 0 ? std::optional<Partition>(Partition{}) : std::nullopt;
    if (k >= 3) return exists_ce_bounded_partitions_search(g, k, budget);
    const int n = g.size();
    UGraph ge = enemy_graph(g);
    if (k == 1) {
        if (!ge.edges().empty()) return std::nullopt;
        Coalition all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return make_partition({all});
    }
    // k = 2: the enemy graph must be bipartite, and in each enemy component
    // one side must be a maximum independent set of that component
    auto bp = bipartition(ge);
    if (!bp.side) return std::nullopt;
    std::vector<Coalition> out(2);
    for (const auto& comp : connected_components(ge, ge.all())) {
        Bits S = to_bits(comp, n);
        int alpha = bip_alpha(ge, S);
        std::array<Coalition, 2> sides;
        for (int v : comp) sides[(*bp.side)[v]].push_back(v);
        int big = sides[0].size() >= sides[1].size() ? 0 : 1;
        if (int(sides[big].size()) != alpha) return std::nullopt;
        for (int v : sides[big]) out[0].push_back(v);
        for (int v : sides[1 - big]) out[1].push_back(v);
    }
    return make_partition(std::move(out));
}

std::optional<Partition> exists_sce_bounded_partitions(const GameInstance& g, int k, Budget&)
{
    require_complete(g);
    // every strictly core stable partition splits each level X_j into |X_j|/j
    // cliques, so they all have the same number of coalitions
    if (k <= 2 && !bipartition(enemy_graph(g)).side) return std::nullopt;
    auto p = exists_sce(g);
    if (!p || int(p->coalitions.size()) > k) return std::nullopt;
    return p;
}

// --------------------------------------------------------------- dispatch

std::vector<Strategy> applicable_strategies(const GameInstance& g, Problem problem)
{
    std::vector<Strategy> out;
    for (Strategy s : {Strategy::IntervalFriend, Strategy::IntervalEnemy, Strategy::BipartiteFriend,
                       Strategy::BipartiteEnemy, Strategy::EnemyDegree2, Strategy::FriendDegree3,
                       Strategy::Generic})
        if (applies(g, s, problem)) out.push_back(s);
    return out;
}

Strategy dispatch_strategy(const GameInstance& g, Problem problem)
{
    return applicable_strategies(g, problem).front();
}

}  // namespace hgame
