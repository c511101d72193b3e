#include "../support.hpp"

#include "hgame/core.hpp"

#include <gtest/gtest.h>

using namespace hgame;
using namespace hgame::testing;

namespace {

GameInstance example() { return parse_instance("agents 3\nmode complete\nfriend 1 2\nfriend 2 3\n"); }

bool stable(const GameInstance& g, const Partition& p, bool strict) { return !brute_stability(g, p, strict); }

}  // namespace

TEST(Core, WorkedExample)
{
    auto g = example();
    Partition p{{{0, 1}, {2}}};
    EXPECT_FALSE(verify_cv(g, p));
    auto b = verify_scv(g, p);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->coalition, (Coalition{1, 2}));
    EXPECT_FALSE(exists_sce(g));
    EXPECT_EQ(solve_cf(g), p);
}

TEST(Core, SolveCfIsCoreStable)
{
    Rng r(41);
    for (int t = 0; t < 300; ++t) {
        auto g = random_complete(r, pick(r, 0, 9));
        for (Strategy s : applicable_strategies(g, Problem::CF)) {
            auto p = solve_cf(g, s);
            EXPECT_NO_THROW(validate_partition(p, g.size()));
            EXPECT_TRUE(stable(g, p, false)) << to_string(s) << "\n" << serialize_instance(g);
            EXPECT_TRUE(check_stable_structure(g, p));
        }
    }
}

TEST(Core, VerifiersMatchBruteForce)
{
    Rng r(42);
    for (int t = 0; t < 200; ++t) {
        auto g = random_complete(r, pick(r, 1, 8));
        for (int k = 0; k < 20; ++k) {
            auto p = k % 2 ? random_partition(r, g.size()) : random_clique_partition(r, g);
            auto cv = verify_cv(g, p), scv = verify_scv(g, p);
            EXPECT_EQ(!cv, stable(g, p, false));
            EXPECT_EQ(!scv, stable(g, p, true));
            if (cv) EXPECT_TRUE(is_blocking(g, p, cv->coalition));
            if (scv) EXPECT_TRUE(is_weakly_blocking(g, p, scv->coalition));
        }
    }
}

TEST(Core, ExistsSceMatchesBruteForce)
{
    Rng r(43);
    for (int t = 0; t < 200; ++t) {
        auto g = random_complete(r, pick(r, 1, 7));
        bool brute = brute_exists(g, true).has_value();
        for (Strategy s : applicable_strategies(g, Problem::SCE)) {
            auto p = exists_sce(g, s);
            EXPECT_EQ(p.has_value(), brute) << to_string(s) << "\n" << serialize_instance(g);
            if (p) EXPECT_TRUE(stable(g, *p, true));
        }
    }
}

TEST(Core, LevelsAgreeAcrossStrategies)
{
    Rng r(44);
    for (int t = 0; t < 200; ++t) {
        auto g = t % 2 ? random_interval_instance(r, pick(r, 1, 9), true) : random_complete(r, pick(r, 1, 9));
        auto base = compute_levels(g).levels;
        int placed = 0;
        for (std::size_t k = 1; k < base.size(); ++k) placed += int(base[k].size());
        EXPECT_EQ(placed, g.size());
        for (Strategy s : applicable_strategies(g, Problem::SCE))
            if (s != Strategy::EnemyDegree2) EXPECT_EQ(compute_levels(g, s).levels, base) << to_string(s);
    }
}

TEST(Core, BoundedVariantsMatchBruteForce)
{
    Rng r(45);
    for (int t = 0; t < 150; ++t) {
        auto g = random_complete(r, pick(r, 1, 7));
        int k = pick(r, 1, 3);
        Budget b1, b2;
        EXPECT_EQ(exists_ce_bounded_coalition(g, k).has_value(),
                  brute_exists(g, false, BruteBounds{std::nullopt, k}).has_value());
        EXPECT_EQ(exists_sce_bounded_coalition(g, k).has_value(),
                  brute_exists(g, true, BruteBounds{std::nullopt, k}).has_value());
        EXPECT_EQ(exists_ce_bounded_partitions(g, k, b1).has_value(),
                  brute_exists(g, false, BruteBounds{k, std::nullopt}).has_value());
        EXPECT_EQ(exists_sce_bounded_partitions(g, k, b2).has_value(),
                  brute_exists(g, true, BruteBounds{k, std::nullopt}).has_value());
    }
}

TEST(Core, EnemyDegree2Characterization)
{
    Rng r(46);
    for (int t = 0; t < 200; ++t) {
        int n = pick(r, 1, 9);
        auto g = complete_from_enemies(n, random_degree2_edges(r, n));
        EXPECT_EQ(sce_enemy_degree2(g), exists_sce(g, Strategy::Generic).has_value()) << serialize_instance(g);
    }
}

TEST(Core, Dispatch)
{
    auto g = example();
    EXPECT_EQ(dispatch_strategy(g, Problem::CF), Strategy::BipartiteFriend);
    auto ring = complete_from_enemies(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto sce = applicable_strategies(ring, Problem::SCE);
    EXPECT_NE(std::find(sce.begin(), sce.end(), Strategy::EnemyDegree2), sce.end());
    EXPECT_EQ(applicable_strategies(ring, Problem::CV).front(), Strategy::Generic);
}

TEST(Core, RejectsNeutralInstances)
{
    auto g = parse_instance("agents 2\nmode neutrals\n");
    Partition p{{{0}, {1}}};
    try {
        verify_cv(g, p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ModeMismatch);
    }
    EXPECT_THROW(solve_cf(g), Error);
    EXPECT_THROW(exists_sce(g), Error);
}

TEST(Core, BudgetOverrun)
{
    Rng r(47);
    auto g = random_complete(r, 12);
    Budget tiny(5);
    EXPECT_THROW(exists_ce_bounded_partitions_search(g, 3, tiny), Error);
}
