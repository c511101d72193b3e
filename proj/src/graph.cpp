#include "hgame/graph.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace hgame {

int UGraph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

UGraph UGraph::complement() const
{
    UGraph c(n);
    for (int v = 0; v < n; ++v) {
        c.adj[v] = ~adj[v];
        c.adj[v].reset(v);
    }
    return c;
}

std::vector<Edge> UGraph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n; ++u)
        for (auto v = adj[u].find_next(u); v != Bits::npos; v = adj[u].find_next(v))
            out.emplace_back(u, int(v));
    return out;
}

UGraph UGraph::from_edges(int n, const std::vector<Edge>& edges)
{
    UGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

UGraph friend_graph(const GameInstance& g)
{
    UGraph u(g.size());
    for (int i = 0; i < g.size(); ++i) u.adj[i] = g.friend_row(i);
    return u;
}

UGraph enemy_graph(const GameInstance& g)
{
    UGraph u(g.size());
    for (int i = 0; i < g.size(); ++i) u.adj[i] = g.enemy_row(i);
    return u;
}

// ---------------------------------------------------------------- cliques

namespace {

Bits above(int n, int v)
{
    Bits b(n);
    if (v + 1 < n) b.set(v + 1, n - v - 1, true);
    return b;
}

// Greedy sequential colouring of g[P]; every class is an independent set,
// so a clique takes at most one vertex per class.
std::vector<Bits> color_classes(const UGraph& g, Bits P)
{
    std::vector<Bits> classes;
    while (P.any()) {
        Bits q = P, cls(g.n);
        for (auto v = q.find_first(); v != Bits::npos; v = q.find_next(v)) {
            cls.set(v);
            q -= g.adj[v];
        }
        P -= cls;
        classes.push_back(std::move(cls));
    }
    return classes;
}

// Is there a clique of exactly `need` vertices inside P?  Appends it to out.
bool extend(const UGraph& g, Bits P, int need, std::vector<int>& out)
{
    if (need <= 0) return true;
    auto cnt = int(P.count());
    if (cnt < need) return false;
    if (need == 1) {
        out.push_back(int(P.find_first()));
        return true;
    }
    auto classes = color_classes(g, P);
    if (int(classes.size()) < need) return false;

    if (int(classes.size()) == need) {
        // every solution takes exactly one vertex per class; branch on the smallest
        std::size_t best = 0;
        for (std::size_t c = 1; c < classes.size(); ++c)
            if (classes[c].count() < classes[best].count()) best = c;
        const Bits& K = classes[best];
        for (auto v = K.find_first(); v != Bits::npos; v = K.find_next(v)) {
            out.push_back(int(v));
            if (extend(g, P & g.adj[v], need - 1, out)) return true;
            out.pop_back();
        }
        return false;
    }

    std::vector<std::pair<int, int>> order;  // (vertex, colour)
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto v = classes[c].find_first(); v != Bits::npos; v = classes[c].find_next(v))
            order.emplace_back(int(v), int(c));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (it->second + 1 < need) return false;
        int v = it->first;
        out.push_back(v);
        if (extend(g, P & g.adj[v], need - 1, out)) return true;
        out.pop_back();
        P.reset(v);
    }
    return false;
}

int greedy_clique_size(const UGraph& g, Bits P)
{
    int size = 0;
    while (P.any()) {
        int best = -1;
        std::size_t bd = 0;
        for (auto v = P.find_first(); v != Bits::npos; v = P.find_next(v)) {
            std::size_t d = (g.adj[v] & P).count();
            if (best < 0 || d > bd) best = int(v), bd = d;
        }
        ++size;
        P &= g.adj[best];
    }
    return size;
}

}  // namespace

int clique_number(const UGraph& g, const Bits& within)
{
    if (within.none()) return 0;
    int w = greedy_clique_size(g, within);
    std::vector<int> tmp;
    while (true) {
        tmp.clear();
        if (!extend(g, within, w + 1, tmp)) return w;
        ++w;
    }
}

Coalition max_clique(const UGraph& g, const Bits& within)
{
    int w = clique_number(g, within);
    Coalition chosen;
    Bits P = within;
    std::vector<int> tmp;
    for (auto v = P.find_first(); v != Bits::npos && int(chosen.size()) < w;) {
        Bits Q = P & g.adj[v] & above(g.n, int(v));
        tmp.clear();
        if (extend(g, Q, w - int(chosen.size()) - 1, tmp)) {
            chosen.push_back(int(v));
            P = Q;
            v = P.find_first();
        } else {
            v = P.find_next(v);
        }
    }
    return chosen;
}

Coalition max_clique(const UGraph& g) { return max_clique(g, g.all()); }

std::optional<Coalition> has_clique_of_size(const UGraph& g, int k, std::optional<int> through,
                                            const Bits& within)
{
    if (k < 1) return std::nullopt;
    std::vector<int> out;
    Bits P = within;
    if (through) {
        if (!within[*through]) return std::nullopt;
        out.push_back(*through);
        P &= g.adj[*through];
        if (!extend(g, P, k - 1, out)) return std::nullopt;
    } else if (!extend(g, P, k, out)) {
        return std::nullopt;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Coalition> has_clique_of_size(const UGraph& g, int k, std::optional<int> through)
{
    return has_clique_of_size(g, k, through, g.all());
}

// --------------------------------------------------- clique partitions

namespace {

// All k-cliques containing v inside R (v in R), members ascending.
void cliques_through(const UGraph& g, int v, const Bits& R, int k,
                     const std::function<bool(const Coalition&)>& visit)
{
    Coalition cur{v};
    std::function<bool(Bits)> rec = [&](Bits cand) -> bool {
        if (int(cur.size()) == k) {
            Coalition c = cur;
            std::sort(c.begin(), c.end());
            return visit(c);
        }
        if (int(cand.count()) < k - int(cur.size())) return false;
        for (auto u = cand.find_first(); u != Bits::npos; u = cand.find_next(u)) {
            cur.push_back(int(u));
            if (rec(cand & g.adj[u] & above(g.n, int(u)))) return true;
            cur.pop_back();
        }
        return false;
    };
    rec(R & g.adj[v]);
}

bool partition_rec(const UGraph& g, Bits R, int k, std::vector<Coalition>& out)
{
    auto v = R.find_first();
    if (v == Bits::npos) return true;
    for (auto u = v; u != Bits::npos; u = R.find_next(u))
        if (int((g.adj[u] & R).count()) < k - 1) return false;
    bool ok = false;
    cliques_through(g, int(v), R, k, [&](const Coalition& c) {
        Bits R2 = R;
        for (int a : c) R2.reset(a);
        out.push_back(c);
        if (partition_rec(g, R2, k, out)) return ok = true;
        out.pop_back();
        return false;
    });
    return ok;
}

}  // namespace

std::optional<std::vector<Coalition>> partition_into_cliques_of_size(const UGraph& g, int k,
                                                                     const Bits& within)
{
    if (k < 1) return std::nullopt;
    if (within.count() % std::size_t(k) != 0) return std::nullopt;
    std::vector<Coalition> out;
    if (!partition_rec(g, within, k, out)) return std::nullopt;
    return out;
}

std::optional<std::vector<Coalition>> partition_into_cliques_of_size(const UGraph& g, int k)
{
    return partition_into_cliques_of_size(g, k, g.all());
}

// ------------------------------------------------------------ matching

std::vector<Edge> max_matching(const UGraph& g, const Bits& within)
{
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    std::vector<int> ids;
    std::vector<int> local(g.n, -1);
    for (auto v = within.find_first(); v != Bits::npos; v = within.find_next(v)) {
        local[v] = int(ids.size());
        ids.push_back(int(v));
    }
    BG bg(ids.size());
    for (int u : ids)
        for (auto v = g.adj[u].find_next(u); v != Bits::npos; v = g.adj[u].find_next(v))
            if (within[v]) boost::add_edge(local[u], local[v], bg);
    std::vector<boost::graph_traits<BG>::vertex_descriptor> mate(ids.size());
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    std::vector<Edge> out;
    const auto null = boost::graph_traits<BG>::null_vertex();
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (mate[i] != null && i < mate[i]) out.emplace_back(ids[i], ids[mate[i]]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> max_matching(const UGraph& g) { return max_matching(g, g.all()); }

// ------------------------------------------------------------ colouring

std::optional<std::vector<int>> k_coloring(const UGraph& g, int k, const Bits& within)
{
    std::vector<int> color(g.n, -1);
    std::vector<int> verts = [&] {
        std::vector<int> v;
        for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) v.push_back(int(x));
        return v;
    }();
    if (verts.empty()) return color;
    if (k < 1) return std::nullopt;

    // DSATUR with backtracking; a fresh colour is only ever the next unused one.
    std::function<bool(int, int)> rec = [&](int done, int used) -> bool {
        if (done == int(verts.size())) return true;
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v : verts) {
            if (color[v] >= 0) continue;
            std::uint64_t seen = 0;
            int deg = 0;
            for (auto u = g.adj[v].find_first(); u != Bits::npos; u = g.adj[v].find_next(u)) {
                if (!within[u]) continue;
                if (color[u] >= 0) seen |= std::uint64_t(1) << std::min(color[u], 63);
                else ++deg;
            }
            int sat = __builtin_popcountll(seen);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) pick = v, best_sat = sat, best_deg = deg;
        }
        std::vector<char> banned(std::size_t(std::max(k, 1)), 0);
        for (auto u = g.adj[pick].find_first(); u != Bits::npos; u = g.adj[pick].find_next(u))
            if (within[u] && color[u] >= 0) banned[color[u]] = 1;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (banned[c]) continue;
            color[pick] = c;
            if (rec(done + 1, std::max(used, c + 1))) return true;
        }
        color[pick] = -1;
        return false;
    };
    if (k > 64) k = std::min<int>(k, int(verts.size()));
    if (!rec(0, 0)) return std::nullopt;
    return color;
}

std::optional<std::vector<int>> k_coloring(const UGraph& g, int k) { return k_coloring(g, k, g.all()); }

BipartitionResult bipartition(const UGraph& g, const Bits& within)
{
    BipartitionResult res;
    std::vector<int> side(g.n, -1), parent(g.n, -1), depth(g.n, 0);
    for (auto s = within.find_first(); s != Bits::npos; s = within.find_next(s)) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> q{int(s)};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto w = g.adj[u].find_first(); w != Bits::npos; w = g.adj[u].find_next(w)) {
                if (!within[w]) continue;
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push_back(int(w));
                } else if (side[w] == side[u]) {
                    // odd cycle: u -> lca <- w, closed by edge (u,w)
                    std::vector<int> a{u}, b{int(w)};
                    int x = u, y = int(w);
                    while (depth[x] > depth[y]) a.push_back(x = parent[x]);
                    while (depth[y] > depth[x]) b.push_back(y = parent[y]);
                    while (x != y) {
                        a.push_back(x = parent[x]);
                        b.push_back(y = parent[y]);
                    }
                    b.pop_back();
                    std::reverse(b.begin(), b.end());
                    res.odd_cycle = a;
                    res.odd_cycle.insert(res.odd_cycle.end(), b.begin(), b.end());
                    res.odd_cycle.push_back(u);
                    return res;
                }
            }
        }
    }
    res.side = side;
    return res;
}

BipartitionResult bipartition(const UGraph& g) { return bipartition(g, g.all()); }

// ------------------------------------------------------------ intervals

namespace {

bool overlap(const Interval& a, const Interval& b) { return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi); }

std::vector<int> members(const Bits& within)
{
    std::vector<int> v;
    for (auto x = within.find_first(); x != Bits::npos; x = within.find_next(x)) v.push_back(int(x));
    return v;
}

}  // namespace

void check_interval_rep(const UGraph& g, const IntervalRep& rep)
{
    if (int(rep.size()) != g.n) throw Error(ErrorKind::RepMismatch, "interval count differs from vertex count");
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (overlap(rep[i], rep[j]) != g.has_edge(i, j))
                throw Error(ErrorKind::RepMismatch, "intervals of " + std::to_string(i + 1) + " and " +
                                                        std::to_string(j + 1) + " contradict adjacency");
}

std::optional<std::vector<Coalition>> interval_clique_partition(const IntervalRep& rep, int k,
                                                                const Bits& within)
{
    auto verts = members(within);
    if (k < 1 || verts.size() % std::size_t(k) != 0) return std::nullopt;
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        if (rep[a].hi != rep[b].hi) return rep[a].hi < rep[b].hi;
        return a < b;
    });
    std::vector<char> used(rep.size(), 0);
    std::vector<Coalition> out;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (used[v]) continue;
        // everything still unused that overlaps v contains v's right end
        Coalition c{v};
        for (std::size_t j = i + 1; j < verts.size() && int(c.size()) < k; ++j) {
            int u = verts[j];
            if (!used[u] && rep[u].lo <= rep[v].hi) c.push_back(u);
        }
        if (int(c.size()) < k) return std::nullopt;
        for (int a : c) used[a] = 1;
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

std::optional<std::vector<Coalition>> interval_clique_partition(const IntervalRep& rep, int k)
{
    Bits all(rep.size());
    all.set();
    return interval_clique_partition(rep, k, all);
}

std::optional<std::vector<int>> interval_coloring(const IntervalRep& rep, int k)
{
    std::vector<int> verts(rep.size());
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
        if (rep[a].lo != rep[b].lo) return rep[a].lo < rep[b].lo;
        return a < b;
    });
    std::vector<int> color(rep.size(), -1);
    std::vector<int> holder;  // colour -> vertex currently using it
    for (int v : verts) {
        int c = -1;
        for (std::size_t x = 0; x < holder.size(); ++x)
            if (holder[x] < 0 || rep[holder[x]].hi < rep[v].lo) {
                c = int(x);
                break;
            }
        if (c < 0) {
            if (int(holder.size()) >= k) return std::nullopt;
            c = int(holder.size());
            holder.push_back(-1);
        }
        holder[c] = v;
        color[v] = c;
    }
    return color;
}

std::vector<int> interval_clique_through(const IntervalRep& rep, const Bits& within)
{
    auto verts = members(within);
    std::vector<int> best(rep.size(), 0);
    for (int v : verts) {
        for (int p : verts) {
            // depth is maximised at some left endpoint
            const Rational& x = rep[p].lo;
            if (x < rep[v].lo || rep[v].hi < x) continue;
            int d = 0;
            for (int u : verts)
                if (rep[u].lo <= x && x <= rep[u].hi) ++d;
            best[v] = std::max(best[v], d);
        }
    }
    return best;
}

Coalition interval_max_clique(const IntervalRep& rep, const Bits& within)
{
    auto verts = members(within);
    Coalition best;
    for (int p : verts) {
        const Rational& x = rep[p].lo;
        Coalition c;
        for (int u : verts)
            if (rep[u].lo <= x && x <= rep[u].hi) c.push_back(u);
        if (c.size() > best.size() || (c.size() == best.size() && c < best)) best = c;
    }
    return best;
}

// ------------------------------------------------------------ degree <= 2

std::vector<Component> degree2_decompose(const UGraph& g)
{
    if (g.max_degree() > 2) throw Error(ErrorKind::DegreeTooHigh, "graph has a vertex of degree > 2");
    std::vector<Component> out;
    std::vector<char> seen(g.n, 0);
    auto walk = [&](int start) {
        std::vector<int> order{start};
        seen[start] = 1;
        int prev = -1, cur = start;
        while (true) {
            int nxt = -1;
            for (auto u = g.adj[cur].find_first(); u != Bits::npos; u = g.adj[cur].find_next(u))
                if (int(u) != prev && !seen[u]) {
                    nxt = int(u);
                    break;
                }
            if (nxt < 0) break;
            seen[nxt] = 1;
            order.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        return order;
    };
    for (int v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        if (g.degree(v) == 0) {
            seen[v] = 1;
            out.push_back({Component::Singleton, {v}});
            continue;
        }
        // find the component; a path starts at its smallest endpoint
        std::vector<int> comp;
        std::deque<int> q{v};
        std::vector<char> in(g.n, 0);
        in[v] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (auto w = g.adj[u].find_first(); w != Bits::npos; w = g.adj[u].find_next(w))
                if (!in[w]) in[w] = 1, q.push_back(int(w));
        }
        int endpoint = -1;
        for (int u : comp)
            if (g.degree(u) == 1 && (endpoint < 0 || u < endpoint)) endpoint = u;
        if (endpoint >= 0) {
            out.push_back({Component::Path, walk(endpoint)});
        } else {
            int s = *std::min_element(comp.begin(), comp.end());
            out.push_back({Component::Cycle, walk(s)});
        }
    }
    return out;
}

Coalition max_is_degree2(const UGraph& g)
{
    Coalition out;
    for (const auto& c : degree2_decompose(g)) {
        std::size_t len = c.order.size();
        std::size_t take = c.kind == Component::Cycle ? len / 2 : (len + 1) / 2;
        for (std::size_t i = 0; i < take; ++i) out.push_back(c.order[2 * i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> connected_components(const UGraph& g, const Bits& within)
{
    std::vector<std::vector<int>> out;
    Bits left = within;
    while (left.any()) {
        auto s = left.find_first();
        std::vector<int> comp;
        Bits frontier(g.n);
        frontier.set(s);
        left.reset(s);
        while (frontier.any()) {
            auto u = frontier.find_first();
            frontier.reset(u);
            comp.push_back(int(u));
            Bits nb = g.adj[u] & left;
            left -= nb;
            frontier |= nb;
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

}  // namespace hgame
