#include "hgame/neutral.hpp"

#include <algorithm>
#include <functional>

namespace hgame {

namespace {

std::vector<int> needs(const std::vector<Score>& cur, bool weak)
{
    std::vector<int> need(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) need[i] = cur[i].friends + (weak ? 0 : 1);
    return need;
}

// Drop agents that cannot reach their friend quota inside U. False if a
// member of I had to go.
bool peel(const GameInstance& g, const std::vector<int>& need, Bits& U, const Bits& I)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto v = U.find_first(); v != Bits::npos; v = U.find_next(v)) {
            if (int((g.friend_row(int(v)) & U).count()) >= need[v]) continue;
            if (I[v]) return false;
            U.reset(v);
            changed = true;
        }
    }
    return true;
}

bool has_improver(const GameInstance& g, const std::vector<Score>& cur, const Bits& C)
{
    for (auto v = C.find_first(); v != Bits::npos; v = C.find_next(v))
        if (int((g.friend_row(int(v)) & C).count()) > cur[v].friends) return true;
    return false;
}

struct BlockSearch {
    const GameInstance& g;
    const std::vector<Score>& cur;
    std::vector<int> need;
    bool weak;
    Budget& budget;

    std::optional<Bits> run(Bits U, Bits I)
    {
        budget.tick();
        while (true) {
            if (!peel(g, need, U, I)) return std::nullopt;
            Bits before = U;
            for (auto v = I.find_first(); v != Bits::npos; v = I.find_next(v)) U -= g.enemy_row(int(v));
            if (U == before) break;
        }
        if (U.none()) return std::nullopt;
        int pick = -1;
        std::size_t most = 0;
        for (auto v = U.find_first(); v != Bits::npos; v = U.find_next(v)) {
            std::size_t e = (g.enemy_row(int(v)) & U).count();
            if (e > most) pick = int(v), most = e;
        }
        if (pick < 0) {
            // enemy-free: U is the largest candidate in this branch
            if (weak && !has_improver(g, cur, U)) return std::nullopt;
            return U;
        }
        Bits I2 = I;
        I2.set(pick);
        if (auto r = run(U, I2)) return r;
        U.reset(pick);
        return run(U, I);
    }
};

std::optional<int> aggrieved(const std::vector<Score>& cur, const Bits* allowed)
{
    for (std::size_t i = 0; i < cur.size(); ++i)
        if (cur[i].enemies > 0 && (!allowed || (*allowed)[i])) return int(i);
    return std::nullopt;
}

// Minimum-size, lexicographically first block inside `core` of size <= max_size.
std::optional<Coalition> lexmin_block(const GameInstance& g, const std::vector<Score>& cur, bool weak,
                                      const Bits& core, int max_size, Budget& budget)
{
    const int n = g.size();
    auto need = needs(cur, weak);
    std::vector<int> L;
    for (auto v = core.find_first(); v != Bits::npos; v = core.find_next(v)) L.push_back(int(v));
    std::vector<Bits> suffix(L.size() + 1, Bits(n));
    for (std::size_t i = L.size(); i-- > 0;) {
        suffix[i] = suffix[i + 1];
        suffix[i].set(L[i]);
    }
    Coalition chosen;
    Bits cb(n), hostile(n);
    std::function<bool(std::size_t, int)> dfs = [&](std::size_t pos, int s) -> bool {
        budget.tick();
        if (int(chosen.size()) == s) {
            for (int i : chosen)
                if (int((g.friend_row(i) & cb).count()) < need[i]) return false;
            return !weak || has_improver(g, cur, cb);
        }
        int slots_after = s - int(chosen.size()) - 1;
        for (std::size_t idx = pos; idx + std::size_t(slots_after) < L.size(); ++idx) {
            int w = L[idx];
            if (hostile[w]) continue;
            Bits saved = hostile;
            chosen.push_back(w);
            cb.set(w);
            hostile |= g.enemy_row(w);
            Bits rem = suffix[idx + 1] - hostile;
            bool ok = true;
            for (int i : chosen) {
                int have = int((g.friend_row(i) & cb).count());
                int could = std::min(slots_after, int((g.friend_row(i) & rem).count()));
                if (have + could < need[i]) {
                    ok = false;
                    break;
                }
            }
            if (ok && dfs(idx + 1, s)) return true;
            chosen.pop_back();
            cb.reset(w);
            hostile = saved;
        }
        return false;
    };
    for (int s = 1; s <= max_size; ++s) {
        chosen.clear();
        cb.reset();
        hostile.reset();
        if (dfs(0, s)) return chosen;
    }
    return std::nullopt;
}

constexpr std::size_t kExactCore = 20;

}  // namespace

std::optional<Coalition> search_block(const GameInstance& g, const std::vector<Score>& cur, bool weak,
                                      Budget& budget, const Bits* allowed)
{
    if (auto a = aggrieved(cur, allowed)) return Coalition{*a};
    BlockSearch bs{g, cur, needs(cur, weak), weak, budget};
    Bits U = allowed ? *allowed : ~Bits(g.size());
    auto r = bs.run(U, Bits(g.size()));
    if (!r) return std::nullopt;
    return to_coalition(*r);
}

std::optional<BlockingCertificate> find_blocking_neutral(const GameInstance& g, const Partition& p,
                                                         bool weak, Budget& budget)
{
    validate_partition(p, g.size());
    auto cur = partition_scores(g, p);
    if (auto a = aggrieved(cur, nullptr)) return certify(g, p, {*a}, weak);
    auto found = search_block(g, cur, weak, budget);
    if (!found) return std::nullopt;

    auto need = needs(cur, weak);
    Bits core = ~Bits(g.size());
    peel(g, need, core, Bits(g.size()));
    if (core.count() <= kExactCore) {
        auto best = lexmin_block(g, cur, weak, core, int(found->size()), budget);
        if (!best) throw std::logic_error("internal: block vanished during minimisation");
        return certify(g, p, *best, weak);
    }
    // shrink to an inclusion-minimal block
    Bits B = to_bits(*found, g.size());
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto x = B.find_first(); x != Bits::npos; x = B.find_next(x)) {
            Bits T = B;
            T.reset(x);
            peel(g, need, T, Bits(g.size()));
            if (T.any() && (!weak || has_improver(g, cur, T))) {
                B = T;
                shrunk = true;
                break;
            }
        }
    }
    return certify(g, p, to_coalition(B), weak);
}

std::optional<BlockingCertificate> find_blocking_neutral(const GameInstance& g, const Partition& p, bool weak)
{
    Budget b;
    return find_blocking_neutral(g, p, weak, b);
}

std::vector<std::vector<int>> twin_classes(const GameInstance& g)
{
    const int n = g.size();
    auto twins = [&](int u, int w) {
        for (int x = 0; x < n; ++x)
            if (x != u && x != w && g.relation(u, x) != g.relation(w, x)) return false;
        return true;
    };
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        bool placed = false;
        for (auto& c : classes)
            if (twins(c.front(), v)) {
                c.push_back(v);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({v});
    }
    return classes;
}

namespace {

class StableSearch {
public:
    StableSearch(const GameInstance& g, bool weak, Budget& budget, const NeutralSearchOptions& opt)
        : g_(g), n_(g.size()), weak_(weak), budget_(budget), opt_(opt), free_(~Bits(g.size())),
          cur_(g.size())
    {
        class_of_.assign(n_, -1);
        for (auto& c : twin_classes(g))
            if (c.size() > 1) {
                for (int v : c) class_of_[v] = int(classes_.size());
                classes_.push_back(c);
            }
    }

    std::optional<Partition> run()
    {
        if (dfs()) return result_;
        return std::nullopt;
    }

private:
    const GameInstance& g_;
    int n_;
    bool weak_;
    Budget& budget_;
    const NeutralSearchOptions& opt_;
    Bits free_;
    std::vector<Score> cur_;
    std::vector<Coalition> placed_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    Partition result_;

    // Would some coalition block every completion of the current partial partition?
    bool doomed()
    {
        std::vector<Score> th = cur_;
        for (auto v = free_.find_first(); v != Bits::npos; v = free_.find_next(v))
            th[v] = Score{0, int((g_.friend_row(int(v)) & free_).count())};
        return search_block(g_, th, weak_, budget_).has_value();
    }

    bool twin_canonical(const Coalition& c) const
    {
        std::vector<int> used(classes_.size(), 0);
        for (int v : c)
            if (class_of_[v] >= 0) ++used[class_of_[v]];
        for (std::size_t k = 0; k < classes_.size(); ++k) {
            if (used[k] == 0) continue;
            int left = used[k];
            for (int v : classes_[k]) {
                if (!free_[v]) continue;
                if (left == 0) break;
                if (std::find(c.begin(), c.end(), v) == c.end()) return false;
                --left;
            }
        }
        return true;
    }

    // Group coalitions into at most k parts without creating any new friend
    // or enemy pair inside a part (which keeps every score unchanged).
    std::optional<Partition> group(int k)
    {
        const std::size_t m = placed_.size();
        std::vector<Bits> bits;
        for (const auto& c : placed_) bits.push_back(to_bits(c, n_));
        std::vector<Bits> rel(m, Bits(n_));
        for (std::size_t i = 0; i < m; ++i)
            for (int v : placed_[i]) rel[i] |= g_.friend_row(v) | g_.enemy_row(v);
        std::vector<int> gid(m, -1);
        std::vector<Bits> groups;
        std::vector<Bits> grel;
        std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
            budget_.tick();
            if (i == m) return true;
            for (std::size_t q = 0; q < groups.size(); ++q) {
                if ((grel[q] & bits[i]).any()) continue;
                if (opt_.max_coalition && int(groups[q].count() + bits[i].count()) > *opt_.max_coalition)
                    continue;
                Bits sg = groups[q], sr = grel[q];
                groups[q] |= bits[i];
                grel[q] |= rel[i];
                gid[i] = int(q);
                if (rec(i + 1)) return true;
                groups[q] = sg;
                grel[q] = sr;
            }
            if (int(groups.size()) < k) {
                groups.push_back(bits[i]);
                grel.push_back(rel[i]);
                gid[i] = int(groups.size()) - 1;
                if (rec(i + 1)) return true;
                groups.pop_back();
                grel.pop_back();
            }
            return false;
        };
        if (!rec(0)) return std::nullopt;
        Partition p;
        for (const auto& b : groups) p.coalitions.push_back(to_coalition(b));
        p.canonicalize();
        return p;
    }

    bool dfs()
    {
        budget_.tick();
        if (doomed()) return false;
        if (free_.none()) {
            if (!opt_.max_partitions || int(placed_.size()) <= *opt_.max_partitions) {
                result_.coalitions = placed_;
                result_.canonicalize();
                return true;
            }
            auto p = group(*opt_.max_partitions);
            if (!p) return false;
            result_ = *p;
            return true;
        }
        int v = int(free_.find_first());
        // connected, enemy-free coalitions of free agents containing v
        Coalition c{v};
        Bits in(n_), banned(n_);
        in.set(v);
        banned = g_.enemy_row(v);
        banned.set(v);
        Bits cand = g_.friend_row(v) & free_;
        cand -= banned;
        return grow(c, in, cand, banned);
    }

    bool try_coalition(const Coalition& raw)
    {
        Coalition c = raw;
        std::sort(c.begin(), c.end());
        if (!twin_canonical(c)) return false;
        if (opt_.on_coalition) opt_.on_coalition(c);
        Bits b = to_bits(c, n_);
        for (int a : c) {
            cur_[a] = score_bits(g_, a, b);
            free_.reset(a);
        }
        placed_.push_back(c);
        bool ok = dfs();
        placed_.pop_back();
        for (int a : c) free_.set(a);
        return ok;
    }

    // Each connected set is produced once: candidates tried earlier at this
    // level are excluded from later branches.
    bool grow(Coalition& c, Bits& in, Bits cand, Bits excluded)
    {
        if (try_coalition(c)) return true;
        if (opt_.max_coalition && int(c.size()) >= *opt_.max_coalition) return false;
        while (cand.any()) {
            int w = int(cand.find_first());
            cand.reset(w);
            Bits ex2 = excluded | g_.enemy_row(w);
            Bits cand2 = (cand | (g_.friend_row(w) & free_)) - in;
            cand2 -= ex2;
            cand2.reset(w);
            c.push_back(w);
            in.set(w);
            bool ok = grow(c, in, cand2, ex2);
            c.pop_back();
            in.reset(w);
            if (ok) return true;
            excluded.set(w);
            cand -= excluded;
        }
        return false;
    }
};

}  // namespace

std::optional<Partition> exists_ce_neutral(const GameInstance& g, Budget& budget, const NeutralSearchOptions& opt)
{
    return StableSearch(g, false, budget, opt).run();
}

std::optional<Partition> exists_sce_neutral(const GameInstance& g, Budget& budget, const NeutralSearchOptions& opt)
{
    return StableSearch(g, true, budget, opt).run();
}

std::optional<Partition> exists_ce_neutral_bounded(const GameInstance& g, std::optional<int> max_partitions,
                                                   std::optional<int> max_coalition, Budget& budget)
{
    NeutralSearchOptions opt;
    opt.max_partitions = max_partitions;
    opt.max_coalition = max_coalition;
    return exists_ce_neutral(g, budget, opt);
}

std::optional<Partition> exists_sce_neutral_bounded(const GameInstance& g, std::optional<int> max_partitions,
                                                    std::optional<int> max_coalition, Budget& budget)
{
    NeutralSearchOptions opt;
    opt.max_partitions = max_partitions;
    opt.max_coalition = max_coalition;
    return exists_sce_neutral(g, budget, opt);
}

}  // namespace hgame
