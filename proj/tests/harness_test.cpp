#include "domgame/harness.hpp"
#include "domgame/io.hpp"

#include <gtest/gtest.h>

using namespace domgame;
using namespace domgame::harness;

namespace {

auto config(int workers = 1) -> HarnessConfig
{
    HarnessConfig c;
    c.workers = workers;
    return c;
}

auto stable_json(const ExperimentReport & r) -> std::string
{
    JsonOptions o;
    o.include_timing = false;
    return to_json(r, o).dump();
}

auto has_witness(const ExperimentReport & r, const std::vector<Edge> & added) -> bool
{
    for (const auto & w : r.witnesses)
        if (w.added == added)
            return true;
    return false;
}

} // namespace

TEST(EdgeAdditions, OneEdgeOnElevenPath)
{
    auto r = enumerate_edge_additions(Shape::Path, 11, 1, config(), 32);
    EXPECT_EQ(r.max_value, 5);
    EXPECT_EQ(r.parameters["graphs"], 45);
    EXPECT_EQ(r.witnesses.size(), 45u);
    EXPECT_TRUE(r.ok());
}

TEST(EdgeAdditions, TwoEdgesOnElevenPathAllGiveFive)
{
    auto r = enumerate_edge_additions(Shape::Path, 11, 2, config(), 32);
    EXPECT_EQ(r.max_value, 5);
    EXPECT_EQ(r.witnesses.size(), 990u);
}

TEST(EdgeAdditions, ThreeEdgesOnElevenPathReachSix)
{
    auto r = enumerate_edge_additions(Shape::Path, 11, 3, config(), 32);
    EXPECT_EQ(r.max_value, 6);
    EXPECT_TRUE(has_witness(r, {{0, 4}, {1, 7}, {5, 8}}));
    EXPECT_TRUE(has_witness(r, {{0, 4}, {2, 7}, {5, 8}}));
    EXPECT_TRUE(r.ok());
}

TEST(EdgeAdditions, SmallCycle)
{
    auto r = enumerate_edge_additions(Shape::Cycle, 8, 2, config(), 32);
    EXPECT_LE(r.max_value, 4);
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0].family, "cycle+edges");
}

TEST(EdgeAdditions, SymmetryReductionPreservesResults)
{
    for (auto [base, n, k] : std::vector<std::tuple<Shape, int, int>>{
             {Shape::Path, 7, 2}, {Shape::Path, 8, 3}, {Shape::Cycle, 7, 2}, {Shape::Cycle, 8, 3}, {Shape::Path, 6, 1}}) {
        auto on = config();
        auto off = config();
        off.symmetry = false;
        auto a = enumerate_edge_additions(base, n, k, on, 32);
        auto b = enumerate_edge_additions(base, n, k, off, 32);
        EXPECT_EQ(a.max_value, b.max_value);
        ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
        for (std::size_t i = 0; i < a.witnesses.size(); ++i)
            EXPECT_EQ(a.witnesses[i].added, b.witnesses[i].added);
        EXPECT_LT(a.parameters["solved"].get<int>(), b.parameters["solved"].get<int>());
    }
}

TEST(EdgeAdditions, WitnessesResolveFromSerializedEdgeLists)
{
    auto r = enumerate_edge_additions(Shape::Cycle, 9, 2, config(), 32);
    auto j = to_json(r);
    ASSERT_EQ(j["witnesses"].size(), r.witnesses.size());
    for (const auto & w : j["witnesses"]) {
        auto pg = io::parse_edge_list(w["edge_list"].get<std::string>());
        EXPECT_EQ(game_value(pg, Turn::Dominator).moves, w["value"].get<int>());
    }
}

TEST(EdgeAdditions, WorkerCountDoesNotChangeReport)
{
    auto a = enumerate_edge_additions(Shape::Path, 9, 2, config(1), 32);
    auto b = enumerate_edge_additions(Shape::Path, 9, 2, config(4), 32);
    EXPECT_EQ(stable_json(a), stable_json(b));
}

TEST(EdgeAdditions, Errors)
{
    EXPECT_THROW(enumerate_edge_additions(Shape::Path, 8, 0, config(), 32), InvalidArgument);
    EXPECT_THROW(enumerate_edge_additions(Shape::Path, 15, 2, config(), 14), CapacityExceeded);
    auto tiny = config();
    tiny.solver.memo_limit = 2;
    try {
        enumerate_edge_additions(Shape::Path, 8, 1, tiny, 32);
        FAIL() << "expected abort";
    }
    catch (const SolverAborted & e) {
        EXPECT_NE(std::string(e.what()).find("plus 0~2"), std::string::npos) << e.what();
    }
}

TEST(EdgeAdditions, NoCandidateEdges)
{
    auto r = enumerate_edge_additions(Shape::Cycle, 3, 1, config(), 32);
    EXPECT_EQ(r.parameters["graphs"], 0);
    EXPECT_TRUE(r.ok());
}

TEST(EdgeAdditions, DeskCaps)
{
    EXPECT_EQ(desk_cap(Shape::Path, 2), 14);
    EXPECT_EQ(desk_cap(Shape::Cycle, 3), 12);
    EXPECT_EQ(full_cap(Shape::Path, 2), 21);
    EXPECT_EQ(full_cap(Shape::Path, 3), 15);
    EXPECT_EQ(full_cap(Shape::Cycle, 2), 24);
    EXPECT_EQ(full_cap(Shape::Cycle, 3), 20);
}

TEST(EdgeAdditions, RangeSweepMergesRows)
{
    auto r = sweep_edge_additions(Shape::Path, 4, 9, 2, config(), 14);
    EXPECT_EQ(r.rows.size(), 6u);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.max_value, 5);
}

TEST(FamilySweep, TadpolesAndHattedCycles)
{
    int skipped = 0;
    auto specs = expand_family_range("tadpole", {{"m", 3, 8}, {"n", 1, 6}}, {}, 12, skipped);
    EXPECT_EQ(specs.size() + skipped, 36u);
    auto r = sweep_family(specs, config());
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.rows.size(), specs.size());

    auto hats = expand_family_range("hatted-cycle", {{"n", 4, 12}}, {}, 32, skipped);
    auto h = sweep_family(hats, config());
    EXPECT_TRUE(h.ok());
    for (const auto & row : h.rows)
        EXPECT_EQ(row.gamma_g, hatted_cycle_equivalent_cycle_value(row.n - 1));
}

TEST(FamilySweep, SkipsInvalidCombinations)
{
    int skipped = 0;
    auto specs = expand_family_range("cycle-with-chord", {{"n", 4, 6}, {"i", 1, 6}}, {}, 32, skipped);
    EXPECT_EQ(specs.size(), 6u);
    EXPECT_EQ(skipped, 12);
    EXPECT_THROW(expand_family_range("tadpole", {{"m", 5, 3}}, {"n=1"}, 32, skipped), InvalidArgument);
}

TEST(FamilySweep, PrimePiecesUseBothStarts)
{
    std::vector<FamilySpec> specs;
    for (int n = 0; n <= 8; ++n) {
        specs.push_back(family::PrimePath{n});
        specs.push_back(family::DoublePrimePath{n});
    }
    auto r = sweep_family(specs, config());
    EXPECT_TRUE(r.ok());
}

TEST(FamilySweep, OversizedInstanceNamesSpec)
{
    std::vector<FamilySpec> specs = {family::Halin{1, {3}}, family::Halin{3, {3, 3, 3}}};
    try {
        sweep_family(specs, config());
        FAIL() << "expected a capacity error";
    }
    catch (const InvalidArgument & e) {
        EXPECT_NE(std::string(e.what()).find("halin k=3 d=3,3,3"), std::string::npos) << e.what();
    }
}

TEST(FamilySweep, RandomFamilyFXIsSeededAndValid)
{
    Rng a(5);
    Rng b(5);
    for (int i = 0; i < 30; ++i) {
        auto x = random_family_fx(a, 14);
        auto y = random_family_fx(b, 14);
        EXPECT_EQ(describe(x), describe(y));
        auto lg = generate(x);
        EXPECT_LE(lg.graph.order(), 14);
    }
    EXPECT_THROW(random_family_fx(a, 3), InvalidArgument);
}

TEST(REquality, ReportsEvidence)
{
    auto r = check_r_equality(3, config());
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0].gamma_g, 6);
    EXPECT_EQ(r.notes.size(), 2u);
    EXPECT_NE(r.notes[0].find("R_11"), std::string::npos);
    EXPECT_THROW(check_r_equality(6, config()), CapacityExceeded);
    EXPECT_THROW(check_r_equality(1, config()), InvalidArgument);
}

TEST(Tables, AllRowsMatch)
{
    auto r = verify_tables();
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checks.size(), 16u + 64u + 1u);
    EXPECT_EQ(r.max_value, 16);
}

TEST(Properties, SmallRunPassesAndIsDeterministic)
{
    auto a = property_suite(3, 40, config());
    auto b = property_suite(3, 40, config());
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(stable_json(a), stable_json(b));
    EXPECT_EQ(a.checks.size(), 5u);
    EXPECT_THROW(property_suite(3, 0, config()), InvalidArgument);
}

TEST(Report, Formats)
{
    auto r = enumerate_edge_additions(Shape::Path, 6, 1, config(), 32);
    auto csv = to_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "family,params,n,gamma_g,bound,holds,is_half_graph");
    EXPECT_NE(csv.find("path+edges,n=6 k=1 graphs=10,6,3,3,true,true"), std::string::npos) << csv;
    auto j = to_json(r);
    for (const char * key : {"experiment", "parameters", "rows", "max_value", "witnesses", "wall_seconds",
                             "states_explored"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["rows"][0]["is_half_graph"], true);
    auto text = to_text(r);
    EXPECT_NE(text.find("max_value = 3\n"), std::string::npos);
    EXPECT_NE(text.find("ok = true"), std::string::npos);
    JsonOptions capped;
    capped.max_witnesses = 2;
    EXPECT_EQ(to_json(r, capped)["witnesses"].size(), 2u);
}
