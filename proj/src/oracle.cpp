#include "hgame/oracle.hpp"

#include <algorithm>
#include <bit>

namespace hgame {

namespace {

void guard(bool ok, const std::string& what)
{
    if (!ok) throw Error(ErrorKind::SizeGuard, what);
}

}  // namespace

std::uint64_t bell_number(int n)
{
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto x : row) next.push_back(next.back() + x);
        row = next;
    }
    return row.front();
}

void for_each_partition(int n, const std::function<bool(const Partition&)>& f)
{
    guard(n <= kMaxPartitionAgents, "partition enumeration limited to 12 agents");
    std::vector<int> rgs(n, 0), mx(n, 0);
    auto emit = [&] {
        Partition p;
        for (int i = 0; i < n; ++i) {
            if (rgs[i] >= int(p.coalitions.size())) p.coalitions.resize(rgs[i] + 1);
            p.coalitions[rgs[i]].push_back(i);
        }
        return f(p);
    };
    if (n == 0) {
        f(Partition{});
        return;
    }
    while (true) {
        if (!emit()) return;
        int i = n - 1;
        while (i > 0 && rgs[i] == mx[i - 1] + 1) --i;
        if (i == 0) return;
        ++rgs[i];
        mx[i] = std::max(mx[i - 1], rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            mx[j] = mx[i];
        }
    }
}

std::vector<Partition> all_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

namespace {

struct Masks {
    std::vector<std::uint32_t> fr, en;
};

Masks masks_of(const GameInstance& g)
{
    Masks m;
    int n = g.size();
    m.fr.assign(n, 0);
    m.en.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Relation r = g.relation(i, j);
            if (r == Relation::Friend) m.fr[i] |= 1u << j;
            if (r == Relation::Enemy) m.en[i] |= 1u << j;
        }
    return m;
}

// -1: i prefers coalition mask a over b; 1: b over a; 0: indifferent
int cmp(const Masks& m, int i, std::uint32_t a, std::uint32_t b)
{
    int ea = std::popcount(m.en[i] & a), eb = std::popcount(m.en[i] & b);
    if (ea != eb) return ea < eb ? -1 : 1;
    int fa = std::popcount(m.fr[i] & a), fb = std::popcount(m.fr[i] & b);
    if (fa != fb) return fa > fb ? -1 : 1;
    return 0;
}

std::optional<std::uint32_t> first_block(const Masks& m, int n, const std::vector<std::uint32_t>& own,
                                         bool strict_core)
{
    // canonical order: by size, then lexicographic on the sorted member list
    for (int s = 1; s <= n; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::uint32_t c = 0;
            for (int i : idx) c |= 1u << i;
            bool all_ok = true, some_strict = false;
            for (int i : idx) {
                int r = cmp(m, i, c, own[i]);
                if (r < 0) some_strict = true;
                else if (!strict_core || r > 0) {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok && some_strict) return c;
            int k = s - 1;
            while (k >= 0 && idx[k] == n - s + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::vector<std::uint32_t> own_masks(const Partition& p, int n)
{
    std::vector<std::uint32_t> own(n, 0);
    for (const auto& c : p.coalitions) {
        std::uint32_t m = 0;
        for (int a : c) m |= 1u << a;
        for (int a : c) own[a] = m;
    }
    return own;
}

Coalition unmask(std::uint32_t c)
{
    Coalition out;
    for (int i = 0; i < 32; ++i)
        if (c >> i & 1) out.push_back(i);
    return out;
}

}  // namespace

std::optional<Coalition> brute_stability(const GameInstance& g, const Partition& p, bool strict_core)
{
    int n = g.size();
    guard(n <= kMaxSubsetAgents, "coalition sweep limited to 20 agents");
    validate_partition(p, n);
    auto b = first_block(masks_of(g), n, own_masks(p, n), strict_core);
    if (!b) return std::nullopt;
    return unmask(*b);
}

std::optional<Partition> brute_exists(const GameInstance& g, bool strict_core, BruteBounds bounds)
{
    int n = g.size();
    guard(n <= kMaxPartitionAgents, "existence sweep limited to 12 agents");
    Masks m = masks_of(g);
    std::optional<Partition> found;
    for_each_partition(n, [&](const Partition& p) {
        if (bounds.max_partitions && int(p.coalitions.size()) > *bounds.max_partitions) return true;
        if (bounds.max_coalition && int(p.max_size()) > *bounds.max_coalition) return true;
        if (!first_block(m, n, own_masks(p, n), strict_core)) {
            found = p;
            return false;
        }
        return true;
    });
    return found;
}

std::optional<std::vector<bool>> brute_sat3(const CnfFormula& f)
{
    guard(f.n_vars <= 20, "3SAT oracle limited to 20 variables");
    for (std::uint32_t a = 0; a < (1u << f.n_vars); ++a) {
        auto val = [&](int lit) {
            bool v = a >> (std::abs(lit) - 1) & 1;
            return lit > 0 ? v : !v;
        };
        bool ok = std::all_of(f.clauses.begin(), f.clauses.end(),
                              [&](const auto& c) { return val(c[0]) || val(c[1]) || val(c[2]); });
        if (ok) {
            std::vector<bool> out(f.n_vars);
            for (int i = 0; i < f.n_vars; ++i) out[i] = a >> i & 1;
            return out;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> brute_3coloring(const UGraph& g)
{
    guard(g.n <= 15, "3-colouring oracle limited to 15 vertices");
    std::vector<int> col(g.n, 0);
    auto edges = g.edges();
    while (true) {
        bool ok = std::all_of(edges.begin(), edges.end(), [&](Edge e) { return col[e.first] != col[e.second]; });
        if (ok) return col;
        int i = 0;
        while (i < g.n && col[i] == 2) col[i++] = 0;
        if (i == g.n) return std::nullopt;
        ++col[i];
    }
}

std::optional<std::vector<Coalition>> brute_triangle_partition(const UGraph& g)
{
    guard(g.n <= 15, "triangle-partition oracle limited to 15 vertices");
    if (g.n % 3 != 0) return std::nullopt;
    std::vector<Coalition> tris;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) tris.push_back({a, b, c});
    // choose n/3 pairwise disjoint triangles
    std::size_t need = std::size_t(g.n) / 3;
    std::vector<Coalition> pick;
    std::function<bool(std::size_t, std::uint32_t)> rec = [&](std::size_t from, std::uint32_t used) {
        if (pick.size() == need) return true;
        for (std::size_t t = from; t < tris.size(); ++t) {
            std::uint32_t m = 0;
            for (int v : tris[t]) m |= 1u << v;
            if (m & used) continue;
            pick.push_back(tris[t]);
            if (rec(t + 1, used | m)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(0, 0)) return pick;
    return std::nullopt;
}

std::optional<std::vector<int>> brute_exact_cover(const X3cInstance& x)
{
    int m = int(x.sets.size());
    guard(m <= 20, "exact-cover oracle limited to 20 sets");
    guard(x.n_elements <= 63, "exact-cover oracle limited to 63 elements");
    std::uint64_t full = x.n_elements == 0 ? 0 : (~std::uint64_t(0) >> (64 - x.n_elements));
    for (std::uint32_t sub = 0; sub < (1u << m); ++sub) {
        std::uint64_t cov = 0;
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
            if (!(sub >> j & 1)) continue;
            for (int e : x.sets[j]) {
                if (cov >> e & 1) ok = false;
                cov |= std::uint64_t(1) << e;
            }
        }
        if (ok && cov == full) {
            std::vector<int> out;
            for (int j = 0; j < m; ++j)
                if (sub >> j & 1) out.push_back(j);
            return out;
        }
    }
    return std::nullopt;
}

std::optional<Coalition> brute_independent_set(const UGraph& g, int k)
{
    guard(g.n <= 20, "independent-set oracle limited to 20 vertices");
    for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
        if (std::popcount(s) != k) continue;
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                if ((s >> u & 1) && (s >> v & 1) && g.has_edge(u, v)) ok = false;
        if (ok) return unmask(s);
    }
    return std::nullopt;
}

}  // namespace hgame
