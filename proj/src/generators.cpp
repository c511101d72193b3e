#include "hgame/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hgame {

int Gadget::id(const std::string& name) const
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorKind::MissingAgent, "no agent named '" + name + "'");
    return int(it - names.begin());
}

std::string serialize_gadget(const Gadget& g)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < g.names.size(); ++i) out << "# " << i + 1 << " " << g.names[i] << "\n";
    out << serialize_instance(g.game);
    return out.str();
}

namespace {

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }
std::string lam(const std::string& base, int l) { return base + "(" + std::to_string(l) + ")"; }

// Collects agents and relations; conflicting declarations are construction
// bugs, not input errors.
class Builder {
public:
    int add(const std::string& name, int side = -1)
    {
        if (!ids_.emplace(name, int(names_.size())).second)
            throw std::logic_error("duplicate agent name " + name);
        names_.push_back(name);
        sides_.push_back(side);
        return int(names_.size()) - 1;
    }
    int operator[](const std::string& name) const
    {
        auto it = ids_.find(name);
        if (it == ids_.end()) throw std::logic_error("unknown agent name " + name);
        return it->second;
    }
    int size() const { return int(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    void friends(int a, int b) { put(friends_, enemies_, a, b); }
    void enemies(int a, int b) { put(enemies_, friends_, a, b); }
    void clique_enemies(const std::vector<int>& xs)
    {
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j) enemies(xs[i], xs[j]);
    }
    bool are_enemies(int a, int b) const { return enemies_.count(key(a, b)) > 0; }

    // Complete mode, every unlisted pair friends.
    Gadget complete_from_enemies() const
    {
        std::vector<Edge> fr;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (!enemies_.count({i, j})) fr.emplace_back(i, j);
        return finish(GameInstance::build(size(), fr, {}, Mode::Complete));
    }
    // Complete mode, every unlisted pair enemies.
    Gadget complete_from_friends() const
    {
        std::vector<Edge> fr(friends_.begin(), friends_.end());
        return finish(GameInstance::build(size(), fr, {}, Mode::Complete));
    }
    Gadget with_neutrals() const
    {
        std::vector<Edge> fr(friends_.begin(), friends_.end()), en(enemies_.begin(), enemies_.end());
        return finish(GameInstance::build(size(), fr, en, Mode::WithNeutrals));
    }

private:
    static Edge key(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    static void put(std::set<Edge>& into, const std::set<Edge>& other, int a, int b)
    {
        if (a == b) throw std::logic_error("self relation");
        if (other.count(key(a, b))) throw std::logic_error("pair declared both friend and enemy");
        into.insert(key(a, b));
    }

    Gadget finish(GameInstance g) const
    {
        Gadget out;
        out.game = std::move(g);
        out.names = names_;
        if (std::all_of(sides_.begin(), sides_.end(), [](int s) { return s >= 0; }) && !sides_.empty()) {
            for (const auto* rel : {&friends_, &enemies_})
                for (auto [a, b] : *rel)
                    if (sides_[a] == sides_[b])
                        throw std::logic_error("relation inside one side: " + names_[a] + " - " + names_[b]);
            out.sides = sides_;
        }
        return out;
    }

    std::vector<std::string> names_;
    std::vector<int> sides_;
    std::map<std::string, int> ids_;
    std::set<Edge> friends_, enemies_;
};

void assert_that(bool ok, const std::string& what)
{
    if (!ok) throw std::logic_error("gadget assertion failed: " + what);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

// The cyclic no-instance: main pairs a^1_i, a^2_i and connectors b^1_i, b^2_i.
// ids[i] = {a1, a2, b1, b2}.
std::vector<std::array<int, 4>> add_ring(Builder& B, int R, const std::string& prefix)
{
    std::vector<std::array<int, 4>> v(R);
    for (int i = 0; i < R; ++i) {
        v[i][0] = B.add(prefix + idx("a1", i));
        v[i][1] = B.add(prefix + idx("a2", i));
        v[i][2] = B.add(prefix + idx("b1", i));
        v[i][3] = B.add(prefix + idx("b2", i));
    }
    for (int i = 0; i < R; ++i) {
        int nx = mod(i + 1, R), pv = mod(i - 1, R);
        B.friends(v[i][0], v[i][1]);
        B.friends(v[i][2], v[i][3]);
        for (int z = 0; z < 2; ++z)
            for (int w = 0; w < 2; ++w) {
                B.friends(v[i][z], v[nx][w]);
                B.friends(v[i][z], v[i][2 + w]);
            }
        B.friends(v[i][0], v[pv][2]);
        B.friends(v[i][1], v[pv][3]);
    }
    for (int i = 0; i < R; ++i) {
        int nx = mod(i + 1, R);
        for (int z = 2; z < 4; ++z)
            for (int j = 0; j < R; ++j)
                for (int q = 0; q < 4; ++q) {
                    bool keep = (j == i) || (j == nx && q < 2);
                    if (!keep) B.enemies(v[i][z], v[j][q]);
                }
        // main pairs that share no T_j are enemies
        for (int j = 0; j < R; ++j) {
            if (j == i || j == nx || j == mod(i - 1, R)) continue;
            for (int z = 0; z < 2; ++z)
                for (int w = 0; w < 2; ++w) B.enemies(v[i][z], v[j][w]);
        }
    }
    return v;
}

void check_literals(const CnfFormula& f)
{
    for (const auto& c : f.clauses)
        for (int l : c)
            if (l == 0 || std::abs(l) > f.n_vars)
                throw Error(ErrorKind::OutOfRange, "literal " + std::to_string(l) + " out of range");
}

std::vector<std::vector<int>> element_sets(const X3cInstance& x)
{
    std::vector<std::vector<int>> in(x.n_elements);
    for (int j = 0; j < int(x.sets.size()); ++j)
        for (int e : x.sets[j]) {
            if (e < 0 || e >= x.n_elements) throw Error(ErrorKind::OutOfRange, "element out of range");
            in[e].push_back(j);
        }
    return in;
}

void check_x3c(const X3cInstance& x, bool frequency)
{
    if (x.n_elements <= 0 || x.n_elements % 3 != 0)
        throw Error(ErrorKind::OutOfRange, "element count must be a positive multiple of 3");
    auto in = element_sets(x);
    if (frequency)
        for (int e = 0; e < x.n_elements; ++e)
            if (in[e].size() > 3)
                throw Error(ErrorKind::FrequencyExceeded,
                            "element " + std::to_string(e + 1) + " appears in more than three sets");
}

}  // namespace

Gadget gen_fig2()
{
    Builder B;
    add_ring(B, 5, "");
    return B.with_neutrals();
}

Gadget gen_3col_to_ce3(const UGraph& graph, int k)
{
    if (graph.max_degree() > 4) throw Error(ErrorKind::DegreeTooHigh, "input degree exceeds 4");
    if (k < 1) throw Error(ErrorKind::OutOfRange, "need at least one colour");
    Builder B;
    int n = graph.n;
    // main agent i, then k-1 dummies; all k form an enemy clique
    std::vector<std::vector<int>> tri(n);
    for (int i = 0; i < n; ++i) {
        tri[i].push_back(B.add(idx("v", i + 1)));
        for (int d = 1; d < k; ++d) tri[i].push_back(B.add(idx("d" + std::to_string(d), i + 1)));
    }
    for (int i = 0; i < n; ++i) B.clique_enemies(tri[i]);
    for (auto [u, v] : graph.edges()) B.enemies(tri[u][0], tri[v][0]);
    Gadget g = B.complete_from_enemies();
    assert_that(g.game.size() == k * n, "k|V| agents");
    assert_that(degree_profile(g.game).max_enemy_degree <= 4 + (k - 1), "enemy degree");
    return g;
}

bool tripack_compliant(const UGraph& graph)
{
    for (int v = 0; v < graph.n; ++v) {
        if (graph.degree(v) != 4) return false;
        std::vector<int> nb;
        for (int u = 0; u < graph.n; ++u)
            if (graph.has_edge(v, u)) nb.push_back(u);
        std::vector<int> deg(4, 0);
        int edges = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (graph.has_edge(nb[a], nb[b])) {
                    ++edges;
                    ++deg[a];
                    ++deg[b];
                }
        std::sort(deg.begin(), deg.end());
        bool two_k2 = edges == 2 && deg == std::vector<int>{1, 1, 1, 1};
        bool star = edges == 3 && deg == std::vector<int>{1, 1, 1, 3};
        if (!two_k2 && !star) return false;
    }
    return true;
}

Gadget gen_tripack_to_sce(const UGraph& graph)
{
    Builder B;
    for (int i = 0; i < graph.n; ++i) B.add(idx("v", i + 1));
    for (auto [u, v] : graph.edges()) B.friends(u, v);
    return B.complete_from_friends();
}

Gadget gen_3sat_to_cv(const CnfFormula& f, bool strict)
{
    check_literals(f);
    auto occ = literal_occurrences(f);
    for (int v = 1; v <= f.n_vars; ++v)
        if (occ[v][0] > 2 || occ[v][1] > 2)
            throw Error(ErrorKind::LiteralCount, "literal of x" + std::to_string(v) + " occurs more than twice");

    const int n = f.n_vars, m = int(f.clauses.size());
    Builder B;
    // T_i(λ), F_i(λ), P_i(λ); c1..c6_j(λ), Q_j(λ); phat(λ)
    std::vector<std::array<int, 3>> T(n + 1), F(n + 1), P(n + 1), Q(m + 1), phat(1);
    std::vector<std::array<std::array<int, 3>, 7>> c(m + 1);
    for (int l = 0; l < 3; ++l) {
        for (int i = 1; i <= n; ++i) {
            T[i][l] = B.add(lam(idx("T", i), l));
            F[i][l] = B.add(lam(idx("F", i), l));
            P[i][l] = B.add(lam(idx("P", i), l));
        }
        for (int j = 1; j <= m; ++j) {
            for (int t = 1; t <= 6; ++t) c[j][t][l] = B.add(lam(idx("c" + std::to_string(t), j), l));
            Q[j][l] = B.add(lam(idx("Q", j), l));
        }
        phat[0][l] = B.add(lam("phat", l));
    }
    auto lit = [&](int literal, int l) { return literal > 0 ? T[literal][l] : F[-literal][l]; };
    auto triple = [&](const std::array<int, 3>& a) { B.clique_enemies({a[0], a[1], a[2]}); };

    for (int i = 1; i <= n; ++i) {
        triple(T[i]);
        triple(F[i]);
        triple(P[i]);
    }
    for (int j = 1; j <= m; ++j) {
        for (int t = 1; t <= 6; ++t) triple(c[j][t]);
        triple(Q[j]);
    }
    triple(phat[0]);
    for (int l = 0; l < 3; ++l) {
        int l1 = (l + 1) % 3, l2 = (l + 2) % 3;
        for (int i = 1; i <= n; ++i) {
            B.enemies(T[i][l], F[i][l]);
            B.enemies(P[i][l], T[i][l2]);
            B.enemies(P[i][l], F[i][l2]);
            if (i < n) {
                B.enemies(P[i][l], P[i + 1][l1]);
                B.enemies(P[i][l], P[i + 1][l2]);
            }
        }
        for (int j = 1; j <= m; ++j) {
            const auto& cl = f.clauses[j - 1];
            for (int b = 0; b < 3; ++b) B.enemies(lit(cl[b], l), c[j][b + 1][l]);
            B.clique_enemies({c[j][1][l], c[j][2][l], c[j][4][l]});
            B.clique_enemies({c[j][3][l], c[j][5][l], c[j][6][l]});
            B.enemies(c[j][4][l], c[j][5][l]);
            B.enemies(Q[j][l], c[j][6][l1]);
            if (j < m) {
                B.enemies(Q[j][l], Q[j + 1][l1]);
                B.enemies(Q[j][l], Q[j + 1][l2]);
            }
        }
        if (n > 0) {
            B.enemies(phat[0][l], P[1][l1]);
            B.enemies(phat[0][l], P[1][l2]);
        }
        if (m > 0) {
            B.enemies(phat[0][l], Q[1][l1]);
            B.enemies(phat[0][l], Q[1][l2]);
        }
    }

    // A_λ: variable and clause enforcers each consistent, not with each other
    std::vector<Coalition> A(3);
    for (int l = 0; l < 3; ++l) {
        int l1 = (l + 1) % 3, l2 = (l + 2) % 3;
        for (int i = 1; i <= n; ++i) A[l].insert(A[l].end(), {T[i][l], F[i][l2], P[i][l2]});
        for (int j = 1; j <= m; ++j) {
            if (f.clauses[j - 1][0] > 0)
                A[l].insert(A[l].end(), {c[j][1][l2], c[j][4][l], c[j][5][l2], c[j][6][l]});
            else
                A[l].insert(A[l].end(), {c[j][1][l], c[j][4][l2], c[j][5][l], c[j][6][l2]});
            A[l].insert(A[l].end(), {c[j][2][l1], c[j][3][l1], Q[j][l]});
        }
        assert_that(int(A[l].size()) == 3 * n + 7 * m, "|A_λ| = 3n + 7m");
    }

    Partition p;
    if (!strict) {
        Gadget g = B.complete_from_enemies();
        for (int l = 0; l < 3; ++l) p.coalitions.push_back(A[l]);
        for (int l = 0; l < 3; ++l) p.coalitions.push_back({phat[0][l]});
        p.canonicalize();
        validate_partition(p, g.game.size());
        assert_that(degree_profile(g.game).max_enemy_degree <= 8, "enemy degree ≤ 8");
        g.partition = p;
        return g;
    }

    // Strict variant: duplicate everything except P̂.
    const int base = B.size();
    std::vector<bool> is_phat(base, false);
    for (int l = 0; l < 3; ++l) is_phat[phat[0][l]] = true;
    std::vector<int> dup(base, -1);
    const auto& names = B.names();
    Builder S;
    for (int a = 0; a < base; ++a) S.add(names[a]);
    for (int a = 0; a < base; ++a)
        if (!is_phat[a]) dup[a] = S.add(names[a] + "'");
    for (int a = 0; a < base; ++a)
        for (int b = a + 1; b < base; ++b) {
            if (!B.are_enemies(a, b)) continue;
            S.enemies(a, b);
            if (dup[a] >= 0) S.enemies(dup[a], b);
            if (dup[b] >= 0) S.enemies(a, dup[b]);
            if (dup[a] >= 0 && dup[b] >= 0) S.enemies(dup[a], dup[b]);
        }
    Gadget g = S.complete_from_enemies();
    for (int l = 0; l < 3; ++l) {
        Coalition cl = A[l];
        for (int a : A[l]) cl.push_back(dup[a]);
        p.coalitions.push_back(cl);
    }
    for (int l = 0; l < 3; ++l) p.coalitions.push_back({phat[0][l]});
    p.canonicalize();
    validate_partition(p, g.game.size());
    assert_that(degree_profile(g.game).max_enemy_degree <= 16, "enemy degree ≤ 16");
    g.partition = p;
    return g;
}

IsGadget gen_is_to_cv3(const UGraph& graph, int k)
{
    if (graph.max_degree() > 3) throw Error(ErrorKind::NotCubic, "input degree exceeds 3");
    if (k < 1) throw Error(ErrorKind::OutOfRange, "k must be positive");

    // Isolated vertices keep the answer and push k above 3|V|/4.
    int pad = 4 * k <= 3 * graph.n ? 3 * graph.n - 4 * k + 1 : 0;
    std::vector<int> col;
    UGraph G;
    while (true) {
        G = UGraph(graph.n + pad);
        for (auto [u, v] : graph.edges()) G.add_edge(u, v);
        auto c = k_coloring(G, 3);
        if (!c) throw Error(ErrorKind::NotCubic, "input has a K4 component and is not 3-colourable");
        col = *c;
        int kk = k + pad;
        // rebalance so that every class fits in k - 1 slots
        bool ok = true;
        for (int guard = 0; guard <= G.n * 3; ++guard) {
            std::array<int, 3> sz{0, 0, 0};
            for (int x : col) ++sz[x];
            int big = int(std::max_element(sz.begin(), sz.end()) - sz.begin());
            if (sz[big] <= kk - 1) break;
            bool moved = false;
            for (int v = 0; v < G.n && !moved; ++v) {
                if (col[v] != big) continue;
                for (int d = 0; d < 3 && !moved; ++d) {
                    if (d == big || sz[d] + 1 > kk - 1) continue;
                    bool free = true;
                    for (int u = 0; u < G.n; ++u)
                        if (G.has_edge(u, v) && col[u] == d) free = false;
                    if (free) {
                        col[v] = d;
                        moved = true;
                    }
                }
            }
            if (!moved) {
                ok = false;
                break;
            }
        }
        std::array<int, 3> sz{0, 0, 0};
        for (int x : col) ++sz[x];
        if (ok && *std::max_element(sz.begin(), sz.end()) <= k + pad - 1) break;
        ++pad;
    }
    k += pad;

    Builder B;
    std::vector<int> main(G.n);
    for (int i = 0; i < G.n; ++i) main[i] = B.add(i < graph.n ? idx("v", i + 1) : idx("pad", i + 1));
    std::array<std::vector<int>, 3> dummies;
    std::array<int, 3> sz{0, 0, 0};
    for (int x : col) ++sz[x];
    for (int j = 0; j < 3; ++j)
        for (int r = 1; r <= k - 1 - sz[j]; ++r)
            dummies[j].push_back(B.add("d" + std::to_string(j + 1) + "_" + std::to_string(r)));
    for (auto [u, v] : G.edges()) B.enemies(main[u], main[v]);
    for (int j = 0; j < 3; ++j) {
        for (int d : dummies[j]) {
            for (int j2 = j + 1; j2 < 3; ++j2)
                for (int d2 : dummies[j2]) B.enemies(d, d2);
            for (int i = 0; i < G.n; ++i)
                if (col[i] != j) B.enemies(d, main[i]);
        }
    }
    Gadget g = B.complete_from_enemies();
    Partition p;
    for (int j = 0; j < 3; ++j) {
        Coalition c = dummies[j];
        for (int i = 0; i < G.n; ++i)
            if (col[i] == j) c.push_back(main[i]);
        assert_that(int(c.size()) == k - 1, "coalition size k - 1");
        p.coalitions.push_back(c);
    }
    p.canonicalize();
    validate_partition(p, g.game.size());
    g.partition = p;
    return IsGadget{std::move(g), G, k};
}

Gadget gen_3sat_to_ce_neutral(const CnfFormula& f)
{
    check_literals(f);
    auto occ = literal_occurrences(f);
    for (int v = 1; v <= f.n_vars; ++v)
        if (occ[v][0] != 2 || occ[v][1] != 2)
            throw Error(ErrorKind::LiteralCount,
                        "every literal must occur exactly twice; x" + std::to_string(v) + " does not");
    const int n = f.n_vars, m = int(f.clauses.size());
    Builder B;
    std::vector<int> y(n + 1), ybar(n + 1);
    std::vector<std::array<int, 4>> R(n + 1);
    std::vector<std::vector<std::array<int, 4>>> X(n + 1), C(m + 1);
    for (int i = 1; i <= n; ++i) {
        y[i] = B.add(idx("y", i));
        ybar[i] = B.add(idx("ybar", i));
        for (int r = 0; r < 4; ++r) R[i][r] = B.add(idx("r" + std::to_string(r + 1), i));
        X[i] = add_ring(B, 5, "X" + std::to_string(i) + ".");
    }
    for (int j = 1; j <= m; ++j) C[j] = add_ring(B, 7, "C" + std::to_string(j) + ".");

    // b^1_0, b^2_0, a^1_1, a^2_1 of a variable blocker
    auto gate = [&](int i) {
        return std::array<int, 4>{X[i][0][2], X[i][0][3], X[i][1][0], X[i][1][1]};
    };
    for (int i = 1; i <= n; ++i) {
        B.enemies(y[i], ybar[i]);
        for (int p : gate(i)) {
            B.friends(p, y[i]);
            B.friends(p, ybar[i]);
        }
        for (int r = 0; r < 4; ++r) {
            B.friends(R[i][r], y[i]);
            B.friends(R[i][r], ybar[i]);
            for (int s = r + 1; s < 4; ++s) B.friends(R[i][r], R[i][s]);
        }
    }
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= 3; ++k) {
            int l = f.clauses[j - 1][k - 1], v = std::abs(l);
            int agent = l > 0 ? y[v] : ybar[v];
            int b = mod(2 * k, 7), a = mod(2 * k + 1, 7);
            std::array<int, 4> door{C[j][b][2], C[j][b][3], C[j][a][0], C[j][a][1]};
            for (int p : door) {
                B.friends(agent, p);
                for (int q : gate(v)) B.enemies(p, q);
                for (int r : R[v]) B.enemies(p, r);
            }
        }
    Gadget g = B.with_neutrals();
    assert_that(g.game.size() == 26 * n + 28 * m, "26n + 28m agents");
    auto deg = [&](int a) { return int(g.game.friend_list(a).size() + g.game.enemy_list(a).size()); };
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= 3; ++k) {
            int b = mod(2 * k, 7), a = mod(2 * k + 1, 7);
            for (int p : {C[j][b][2], C[j][b][3], C[j][a][0], C[j][a][1]})
                assert_that(deg(p) == 35, "clause door degree 26 + 1 + 8");
        }
    // Gate agents see the doors of all four occurrences: 26 + 2 + 16.
    assert_that(degree_profile(g.game).max_total_degree <= 44, "non-neutral degree ≤ 44");
    return g;
}

Partition ce_neutral_partition(const Gadget& g, const CnfFormula& f, const std::vector<bool>& assignment)
{
    if (int(assignment.size()) != f.n_vars) throw Error(ErrorKind::OutOfRange, "assignment length");
    Partition p;
    // both copies of a^z_i / b^z_i inside a ring
    auto ab = [&](const std::string& ring, const char* ch, int i, int R) {
        std::string k = std::to_string(mod(i, R));
        return Coalition{g.id(ring + ch + "1_" + k), g.id(ring + ch + "2_" + k)};
    };
    auto join = [](Coalition& c, const Coalition& d) { c.insert(c.end(), d.begin(), d.end()); };
    auto pack = [&](std::initializer_list<Coalition> parts) {
        Coalition c;
        for (const auto& d : parts) join(c, d);
        p.coalitions.push_back(c);
    };

    for (int v = 1; v <= f.n_vars; ++v) {
        std::string X = "X" + std::to_string(v) + ".";
        bool val = assignment[v - 1];
        auto a = [&](int i) { return ab(X, "a", i, 5); };
        auto b = [&](int i) { return ab(X, "b", i, 5); };
        Coalition shield{g.id(idx(val ? "ybar" : "y", v))};
        join(shield, a(0));
        join(shield, b(0));
        join(shield, a(1));
        for (int r = 1; r <= 4; ++r) shield.push_back(g.id(idx("r" + std::to_string(r), v)));
        p.coalitions.push_back(shield);
        pack({b(1)});
        pack({a(2), b(2)});
        pack({a(3), b(3), a(4)});
        pack({b(4)});

        // the true literal takes the doors of its two clauses
        Coalition lit{g.id(idx(val ? "y" : "ybar", v))};
        for (std::size_t j = 0; j < f.clauses.size(); ++j)
            for (int k = 1; k <= 3; ++k) {
                int l = f.clauses[j][k - 1];
                if (std::abs(l) != v || (l > 0) != val) continue;
                std::string C = "C" + std::to_string(j + 1) + ".";
                join(lit, ab(C, "a", 2 * k, 7));
                join(lit, ab(C, "b", 2 * k, 7));
                join(lit, ab(C, "a", 2 * k + 1, 7));
            }
        p.coalitions.push_back(lit);
    }

    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        std::string C = "C" + std::to_string(j + 1) + ".";
        auto a = [&](int i) { return ab(C, "a", i, 7); };
        auto b = [&](int i) { return ab(C, "b", i, 7); };
        std::vector<int> tr;
        for (int k = 1; k <= 3; ++k) {
            int l = f.clauses[j][k - 1];
            if ((l > 0) == assignment[std::abs(l) - 1]) tr.push_back(k);
        }
        // door k occupies a_{2k}, b_{2k}, a_{2k+1}
        if (tr.size() <= 1) {
            int k = tr.empty() ? 1 : tr[0];
            if (tr.empty()) pack({a(2 * k), b(2 * k), a(2 * k + 1)});
            pack({b(2 * k + 1)});
            pack({a(2 * k + 2), b(2 * k + 2)});
            pack({a(2 * k + 3), b(2 * k + 3), a(2 * k + 4)});
            pack({b(2 * k + 4)});
            pack({a(2 * k + 5), b(2 * k + 5), a(2 * k + 6)});
            pack({b(2 * k + 6)});
        } else if (tr.size() == 2 && tr[1] == tr[0] + 1) {
            int k = tr[0];
            pack({b(2 * k + 1)});
            pack({b(2 * k + 3)});
            pack({a(2 * k + 4), b(2 * k + 4)});
            pack({a(2 * k + 5), b(2 * k + 5), a(2 * k + 6)});
            pack({b(2 * k + 6)});
        } else if (tr.size() == 2) {  // doors 1 and 3
            pack({a(1), b(1)});
            pack({b(3)});
            pack({a(4), b(4), a(5)});
            pack({b(5)});
            pack({b(0)});
        } else {
            pack({a(1), b(1)});
            pack({b(3)});
            pack({b(5)});
            pack({b(0)});
        }
    }
    p.canonicalize();
    validate_partition(p, g.game.size());
    return p;
}

Gadget gen_x3c_to_sce_neutral(const X3cInstance& x)
{
    check_x3c(x, false);
    const int n = x.n_elements / 3, m = int(x.sets.size());
    if (m < n) throw Error(ErrorKind::OutOfRange, "fewer sets than n; no cover can exist");
    const int tdum = 3 * (m - n) + 4;
    Builder B;
    std::vector<int> a(3 * n), s(m);
    std::vector<std::vector<int>> t(m), e(m - n), d(m - n);
    for (int i = 0; i < 3 * n; ++i) a[i] = B.add(idx("a", i + 1), 0);
    for (int j = 0; j < m; ++j) {
        s[j] = B.add(idx("s", j + 1), 1);
        for (int z = 1; z <= tdum; ++z) t[j].push_back(B.add("t" + std::to_string(z) + "_" + std::to_string(j + 1), 0));
    }
    for (int l = 0; l < m - n; ++l) {
        for (int z = 1; z <= 3; ++z) e[l].push_back(B.add("e" + std::to_string(z) + "_" + std::to_string(l + 1), 0));
        for (int w = 1; w <= m + 1; ++w)
            d[l].push_back(B.add("d" + std::to_string(w) + "_" + std::to_string(l + 1), 1));
    }
    for (int j = 0; j < m; ++j) {
        for (int i : x.sets[j]) B.friends(a[i], s[j]);
        for (int q : t[j]) B.friends(s[j], q);
        for (const auto& el : e)
            for (int q : el) B.friends(s[j], q);
        for (int k = 0; k < m; ++k)
            if (k != j)
                for (int q : t[k]) B.enemies(s[j], q);
    }
    for (int l = 0; l < m - n; ++l)
        for (int q : e[l]) {
            for (int w : d[l]) B.friends(q, w);
            for (int k = 0; k < m - n; ++k)
                if (k != l)
                    for (int w : d[k]) B.enemies(q, w);
        }
    for (int i = 0; i < 3 * n; ++i)
        for (const auto& dl : d)
            for (int w : dl) B.enemies(a[i], w);
    Gadget g = B.with_neutrals();
    assert_that(g.game.size() == 3 * n + m * (3 * (m - n) + 5) + (m - n) * (m + 4), "SCE gadget agent count");
    return g;
}

Gadget gen_x3c_to_cv_neutral(const X3cInstance& x, X3cVariant v)
{
    check_x3c(x, true);
    const int N = x.n_elements, m = int(x.sets.size());
    const bool small = v == X3cVariant::SmallCoalitions;
    auto in = element_sets(x);
    Builder B;
    std::vector<int> a(N), xs(N), ys(N), s(m), t1(m), t2(m);
    std::vector<std::array<int, 2>> ah(N), xh(N);
    std::vector<std::map<int, int>> d(m), e(m);
    for (int i = 0; i < N; ++i) {
        a[i] = B.add(idx("a", i + 1), 0);
        xs[i] = B.add(idx("x", i + 1), 1);
        ys[i] = B.add(idx("y", i + 1), 0);
        if (small) {
            for (int z = 0; z < 2; ++z) ah[i][z] = B.add("ahat" + std::to_string(z + 1) + "_" + std::to_string(i + 1), 1);
            for (int z = 0; z < 2; ++z) xh[i][z] = B.add("xhat" + std::to_string(z + 1) + "_" + std::to_string(i + 1), 0);
        }
    }
    for (int j = 0; j < m; ++j) {
        s[j] = B.add(idx("s", j + 1), 0);
        t1[j] = B.add(idx("t1", j + 1), 1);
        t2[j] = B.add(idx("t2", j + 1), 1);
        for (int i : x.sets[j]) {
            d[j][i] = B.add("d" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 1);
            e[j][i] = B.add("e" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 0);
        }
    }
    for (int j = 0; j < m; ++j) {
        B.friends(s[j], t1[j]);
        B.friends(s[j], t2[j]);
        for (int i : x.sets[j]) {
            B.friends(s[j], d[j][i]);
            B.friends(d[j][i], a[i]);
            B.friends(d[j][i], e[j][i]);
            for (int k : in[i])
                if (k != j) B.enemies(d[j][i], s[k]);
        }
    }
    for (int i = 0; i < N; ++i) {
        B.friends(xs[i], ys[i]);
        B.friends(xs[i], a[i]);
        B.friends(xs[i], a[(i + 1) % N]);
        if (small)
            for (int z = 0; z < 2; ++z) {
                B.friends(ah[i][z], a[i]);
                B.friends(xh[i][z], xs[i]);
            }
    }
    Gadget g = B.with_neutrals();
    Partition p;
    if (!small) {
        Coalition c1, c2;
        for (int i = 0; i < N; ++i) {
            c1.insert(c1.end(), {a[i], xs[i]});
            c2.push_back(ys[i]);
        }
        for (int j = 0; j < m; ++j) {
            c1.insert(c1.end(), {s[j], t1[j], t2[j]});
            for (int i : x.sets[j]) c2.insert(c2.end(), {d[j][i], e[j][i]});
        }
        p.coalitions = {c1, c2};
    } else {
        for (int i = 0; i < N; ++i) {
            p.coalitions.push_back({a[i], ah[i][0], ah[i][1]});
            p.coalitions.push_back({xs[i], xh[i][0], xh[i][1]});
            p.coalitions.push_back({ys[i]});
        }
        for (int j = 0; j < m; ++j) {
            p.coalitions.push_back({s[j], t1[j], t2[j]});
            for (int i : x.sets[j]) p.coalitions.push_back({d[j][i], e[j][i]});
        }
    }
    p.canonicalize();
    validate_partition(p, g.game.size());
    if (small) assert_that(p.max_size() <= 3, "coalitions of size at most 3");
    assert_that(degree_profile(g.game).max_total_degree <= 11, "degree ≤ 11");
    g.partition = p;
    return g;
}

Gadget gen_x3c_to_scv_neutral(const X3cInstance& x, X3cVariant v)
{
    check_x3c(x, true);
    const int N = x.n_elements, m = int(x.sets.size());
    const bool small = v == X3cVariant::SmallCoalitions;
    auto in = element_sets(x);
    auto S = [](const std::string& base, int z, int i) {
        return base + std::to_string(z) + "_" + std::to_string(i);
    };
    Builder B;
    std::vector<int> a(N), b(N), bp(N), xs(N - 1), s(m);
    std::vector<std::array<int, 3>> t(m), tp(m);
    std::vector<std::map<int, int>> d(m);
    std::vector<std::map<int, std::array<int, 2>>> e(m), ep(m);
    // hatted agents: b̂^z_i, b̂'^z_i (one copy at both ends), y^z_i, y'^z_i
    std::vector<std::vector<int>> bh(N), bhp(N);
    std::vector<std::array<int, 2>> yy(N), yp(N);
    for (int i = 0; i < N; ++i) {
        a[i] = B.add(idx("a", i + 1), 0);
        b[i] = B.add(idx("b", i + 1), 1);
        bp[i] = B.add(idx("b'", i + 1), 0);
        if (i + 1 < N) xs[i] = B.add(idx("x", i + 1), 1);
        if (small) {
            int copies = (i == 0 || i == N - 1) ? 1 : 2;
            for (int z = 1; z <= copies; ++z) {
                bh[i].push_back(B.add(S("bhat", z, i + 1), 1));
                bhp[i].push_back(B.add(S("bhat'", z, i + 1), 0));
            }
            if (i + 1 < N)
                for (int z = 0; z < 2; ++z) {
                    yy[i][z] = B.add(S("y", z + 1, i + 1), 0);
                    yp[i][z] = B.add(S("y'", z + 1, i + 1), 1);
                }
        }
    }
    for (int j = 0; j < m; ++j) {
        s[j] = B.add(idx("s", j + 1), 0);
        for (int z = 0; z < 3; ++z) {
            t[j][z] = B.add(S("t", z + 1, j + 1), 1);
            tp[j][z] = B.add(S("t'", z + 1, j + 1), 0);
        }
        for (int i : x.sets[j]) {
            d[j][i] = B.add("d" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 1);
            for (int z = 0; z < 2; ++z) {
                std::string tag = std::to_string(z + 1) + "," + std::to_string(i + 1) + "_" + std::to_string(j + 1);
                e[j][i][z] = B.add("e" + tag, 0);
                ep[j][i][z] = B.add("e'" + tag, 1);
            }
        }
    }
    int g_ = B.add("g", 1), h = B.add("h", 1), hp = B.add("h'", 0);

    for (int j = 0; j < m; ++j) {
        for (int z = 0; z < 3; ++z) {
            B.friends(s[j], t[j][z]);
            B.friends(t[j][z], tp[j][z]);
        }
        for (int i : x.sets[j]) {
            B.friends(s[j], d[j][i]);
            B.friends(d[j][i], a[i]);
            for (int z = 0; z < 2; ++z) {
                B.friends(d[j][i], e[j][i][z]);
                B.friends(e[j][i][z], ep[j][i][z]);
                B.enemies(ep[j][i][z], a[i]);
                B.enemies(ep[j][i][z], s[j]);
            }
            for (int k : in[i])
                if (k != j) B.enemies(d[j][i], s[k]);
            for (int z = 0; z < 3; ++z) B.enemies(tp[j][z], d[j][i]);
        }
    }
    // enemies of b'_i: d^i_j, d^{i-1}_j, and g for i = 1
    auto bprime_enemies = [&](int i) {
        std::vector<int> out;
        for (int j : in[i]) out.push_back(d[j][i]);
        if (i > 0)
            for (int j : in[i - 1]) out.push_back(d[j][i - 1]);
        if (i == 0) out.push_back(g_);
        return out;
    };
    for (int i = 0; i < N; ++i) {
        B.friends(a[i], b[i]);
        B.friends(b[i], bp[i]);
        if (i + 1 < N) {
            B.friends(xs[i], a[i]);
            B.friends(xs[i], a[i + 1]);
        }
        for (int q : bprime_enemies(i)) B.enemies(bp[i], q);
    }
    B.friends(a[0], h);
    B.friends(a[0], g_);
    B.friends(h, hp);
    B.enemies(g_, hp);
    if (small) {
        for (int i = 0; i < N; ++i) {
            for (std::size_t z = 0; z < bh[i].size(); ++z) {
                B.friends(bh[i][z], a[i]);
                B.friends(bh[i][z], bhp[i][z]);
                for (int q : bprime_enemies(i)) B.enemies(bhp[i][z], q);
            }
            std::vector<int> guards{bp[i]};
            guards.insert(guards.end(), bhp[i].begin(), bhp[i].end());
            for (int q : guards) {
                if (i + 1 < N) B.enemies(q, xs[i]);
                if (i > 0) B.enemies(q, xs[i - 1]);
            }
            if (i + 1 < N)
                for (int z = 0; z < 2; ++z) {
                    B.friends(yy[i][z], xs[i]);
                    B.friends(yy[i][z], yp[i][z]);
                    B.enemies(yp[i][z], a[i]);
                    B.enemies(yp[i][z], a[i + 1]);
                }
        }
    }
    Gadget gd = B.with_neutrals();

    Partition p;
    if (!small) {
        Coalition c1, c2;
        for (int i = 0; i < N; ++i) c1.insert(c1.end(), {a[i], b[i], bp[i]});
        for (int i = 0; i + 1 < N; ++i) c1.push_back(xs[i]);
        for (int j = 0; j < m; ++j) {
            c1.push_back(s[j]);
            for (int z = 0; z < 3; ++z) c1.insert(c1.end(), {t[j][z], tp[j][z]});
            for (int i : x.sets[j]) {
                c2.push_back(d[j][i]);
                for (int z = 0; z < 2; ++z) c2.insert(c2.end(), {e[j][i][z], ep[j][i][z]});
            }
        }
        c1.insert(c1.end(), {h, hp});
        p.coalitions = {c1, c2, {g_}};
    } else {
        for (int i = 0; i < N; ++i) {
            Coalition c{a[i], b[i], bp[i]};
            c.insert(c.end(), bh[i].begin(), bh[i].end());
            c.insert(c.end(), bhp[i].begin(), bhp[i].end());
            if (i == 0) c.insert(c.end(), {h, hp});
            p.coalitions.push_back(c);
            if (i + 1 < N) p.coalitions.push_back({xs[i], yy[i][0], yy[i][1], yp[i][0], yp[i][1]});
        }
        for (int j = 0; j < m; ++j) {
            Coalition c{s[j]};
            for (int z = 0; z < 3; ++z) c.insert(c.end(), {t[j][z], tp[j][z]});
            p.coalitions.push_back(c);
            for (int i : x.sets[j])
                p.coalitions.push_back({d[j][i], e[j][i][0], e[j][i][1], ep[j][i][0], ep[j][i][1]});
        }
        p.coalitions.push_back({g_});
    }
    p.canonicalize();
    validate_partition(p, gd.game.size());
    assert_that(degree_profile(gd.game).max_total_degree <= 18, "degree ≤ 18");
    gd.partition = p;
    return gd;
}

GameInstance gen_random(int n, double p_friend, double p_enemy, std::uint64_t seed, Mode mode)
{
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative agent count");
    if (mode == Mode::Complete) p_enemy = 1.0 - p_friend;
    if (!(p_friend >= 0 && p_friend <= 1 && p_enemy >= 0 && p_enemy <= 1 && p_friend + p_enemy <= 1 + 1e-12))
        throw Error(ErrorKind::BadProbabilities, "need 0 ≤ p_friend, p_enemy and p_friend + p_enemy ≤ 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> fr, en;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double u = double(rng() >> 11) * 0x1.0p-53;
            if (u < p_friend) fr.emplace_back(i, j);
            else if (u < p_friend + p_enemy) en.emplace_back(i, j);
        }
    if (mode == Mode::Complete) return GameInstance::build(n, fr, {}, Mode::Complete);
    return GameInstance::build(n, fr, en, Mode::WithNeutrals);
}

}  // namespace hgame
