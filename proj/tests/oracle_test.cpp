#include "domgame/families.hpp"
#include "domgame/oracle.hpp"
#include "domgame/reference_tables.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace domgame;
using namespace domgame::oracle;

TEST(QuarterWeight, Arithmetic)
{
    auto a = QuarterWeight::from_quarters(7);
    auto b = QuarterWeight::from_quarters(6);
    EXPECT_EQ((a + b).quarters(), 13);
    EXPECT_EQ((a + b).ceil(), 4);
    EXPECT_EQ(QuarterWeight::from_quarters(8).ceil(), 2);
    EXPECT_EQ(QuarterWeight{}.ceil(), 0);
    EXPECT_EQ(a.to_string(), "7/4");
    EXPECT_EQ(b.to_string(), "3/2");
    EXPECT_EQ(QuarterWeight::from_quarters(8).to_string(), "2");
    EXPECT_LT(b, a);
}

TEST(PathCycle, Examples)
{
    EXPECT_EQ(path_cycle_gamma_g(7, Shape::Cycle), 3);
    EXPECT_EQ(path_cycle_gamma_g(2, Shape::Path), 1);
    EXPECT_EQ(path_cycle_gamma_g(11, Shape::Path), 5);
    EXPECT_EQ(path_cycle_gamma_g(1, Shape::Path), 1);
    EXPECT_THROW(path_cycle_gamma_g(0, Shape::Path), InvalidArgument);
    EXPECT_THROW(path_cycle_gamma_g(2, Shape::Cycle), InvalidArgument);
}

TEST(PathCycle, AgreesWithMinimax)
{
    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(path_cycle_gamma_g(n, Shape::Path), oracles::game_value(generate(family::Path{n}).graph)) << n;
    for (int n = 3; n <= 12; ++n)
        EXPECT_EQ(path_cycle_gamma_g(n, Shape::Cycle), oracles::game_value(generate(family::Cycle{n}).graph)) << n;
}

TEST(PartialPaths, Examples)
{
    EXPECT_EQ(partial_path_values(3, PieceKind::Prime), (PiecePair{1, 2}));
    EXPECT_EQ(partial_path_values(6, PieceKind::DoublePrime), (PiecePair{3, 4}));
    EXPECT_EQ(partial_path_values(0, PieceKind::Prime), (PiecePair{0, 0}));
    EXPECT_THROW(partial_path_values(-1, PieceKind::Prime), InvalidArgument);
}

TEST(PartialPaths, AgreeWithMinimax)
{
    for (int n = 0; n <= 11; ++n) {
        const auto p = partial_path_values(n, PieceKind::Prime);
        Graph g1 = generate(family::Path{n + 1}).graph;
        EXPECT_EQ(p.d_game, oracles::game_value(g1, {0}, true)) << "P' " << n;
        EXPECT_EQ(p.s_game, oracles::game_value(g1, {0}, false)) << "P' " << n;
        const auto q = partial_path_values(n, PieceKind::DoublePrime);
        Graph g2 = generate(family::Path{n + 2}).graph;
        EXPECT_EQ(q.d_game, oracles::game_value(g2, {0, n + 1}, true)) << "P'' " << n;
        EXPECT_EQ(q.s_game, oracles::game_value(g2, {0, n + 1}, false)) << "P'' " << n;
    }
}

TEST(Weight, Values)
{
    EXPECT_EQ(weight(7).to_string(), "15/4");
    EXPECT_EQ(weight(0).quarters(), 0);
    EXPECT_EQ(weight(6).to_string(), "7/2");
    EXPECT_EQ(weight(1).quarters(), 4);
    EXPECT_EQ(weight(4).quarters(), 8);
    EXPECT_THROW(weight(-2), InvalidArgument);
}

TEST(UnionLemma, Examples)
{
    EXPECT_EQ(union_lemma_bound({{1, PieceKind::Prime}, {2, PieceKind::Prime}}), 3);
    EXPECT_EQ(union_lemma_bound({{0, PieceKind::Prime}}), 0);
    EXPECT_EQ(union_lemma_bound({{1, PieceKind::Prime}, {3, PieceKind::DoublePrime}}), 3);
    EXPECT_EQ(union_lemma_bound({}), 0);
}

TEST(UnionLemma, SingleAndPairedPiecesAgainstMinimax)
{
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            // P'_a + P''_b as one partially dominated forest.
            auto pa = generate(family::PrimePath{a}).partial();
            auto pb = generate(family::DoublePrimePath{b}).partial();
            auto u = disjoint_union(pa, pb);
            const int s_game = oracles::game_value(u.graph, u.dominated.to_vector(), false);
            EXPECT_LE(s_game, union_lemma_bound({{a, PieceKind::Prime}, {b, PieceKind::DoublePrime}})) << a << " " << b;
        }
}

TEST(TadpoleTable, Examples)
{
    EXPECT_EQ(tadpole_table_row(0, 3), (TadpoleRow{3, 7, 4}));
    EXPECT_EQ(tadpole_table_row(2, 2), (TadpoleRow{4, 8, 4}));
    EXPECT_EQ(tadpole_table_row(0, 0), (TadpoleRow{1, 4, 2}));
    EXPECT_EQ(tadpole_table_row(1, 3), (TadpoleRow{4, 8, 4}));
    EXPECT_THROW(tadpole_table_row(4, 0), InvalidArgument);
    EXPECT_THROW(tadpole_table_row(0, -1), InvalidArgument);
}

TEST(TadpoleTable, MatchesPublishedRows)
{
    for (const auto & r : reference::kTadpoleTable) {
        EXPECT_EQ(tadpole_table_row(r.x, r.y), (TadpoleRow{r.bound, r.order, r.ceiling})) << r.x << r.y;
        EXPECT_LE(r.bound, r.ceiling);
    }
}

TEST(TwoTailedTable, Examples)
{
    EXPECT_EQ(two_tailed_table(1, 0, 2), (TwoTailedRow{4, 3, false}));
    EXPECT_EQ(two_tailed_table(0, 0, 0), (TwoTailedRow{1, 2, true}));
    EXPECT_EQ(two_tailed_table(3, 3, 3), (TwoTailedRow{7, 6, false}));
    EXPECT_TRUE(two_tailed_table(2, 2, 2).holds);
}

TEST(TwoTailedTable, MatchesPublishedRows)
{
    int failing = 0;
    for (const auto & r : reference::kTwoTailedTable) {
        EXPECT_EQ(two_tailed_table(r.x, r.y, r.z), (TwoTailedRow{r.bound, r.ceiling, r.holds}))
            << r.x << r.y << r.z;
        failing += r.holds ? 0 : 1;
    }
    EXPECT_EQ(failing, 16);
}

TEST(TwoTailedTable, ExceptionSetMatchesPublishedColumns)
{
    auto derived = two_tailed_exceptions();
    EXPECT_EQ(derived.size(), 16u);
    std::set<ResidueTriple> published;
    for (const auto & e : reference::kTwoTailedExceptions)
        published.emplace(e.n, e.m, e.k);
    EXPECT_EQ(std::set<ResidueTriple>(derived.begin(), derived.end()), published);
}

TEST(KnownFamilyValue, Examples)
{
    EXPECT_EQ(known_family_value(family::BrokenLadder{2}), (KnownValue{8, true}));
    EXPECT_EQ(known_family_value(family::HattedCycle{9}), (KnownValue{5, true}));
    EXPECT_EQ(known_family_value(family::RGraph{2}), (KnownValue{6, false}));
    EXPECT_EQ(known_family_value(family::Tadpole{4, 4}), (KnownValue{4, false}));
    EXPECT_THROW(known_family_value(family::Halin{2, {3, 3}}), InvalidArgument);
}
