#include <warmthkit/chains.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/generators.hh>
#include <warmthkit/hom_complex.hh>
#include <warmthkit/homology.hh>
#include <warmthkit/warmth.hh>

#include <gtest/gtest.h>

using namespace warmthkit;

namespace
{
    auto around(int len, int laps = 1) -> EvenClosedWalk
    {
        EvenClosedWalk w;
        for (int r = 0 ; r < laps ; ++r)
            for (int i = 0 ; i < len ; ++i)
                w.vertices.push_back(i);
        return w;
    }

    auto nonzero(const Chain1 & c) -> int
    {
        int count = 0;
        for (auto x : c.coeffs)
            count += x != 0;
        return count;
    }
}

TEST(WalkTest, Validation)
{
    auto g = cycle(5);
    EXPECT_THROW(validate_walk(g, around(5)), InputError);
    EXPECT_NO_THROW(validate_walk(g, around(5, 2)));
    EXPECT_THROW(validate_walk(g, EvenClosedWalk{ { 0, 2 } }), InputError);
    EXPECT_THROW(validate_walk(g, EvenClosedWalk{}), InputError);
    auto w = around(6);
    EXPECT_EQ(w.a(0), 0);
    EXPECT_EQ(w.b(1), 1);
    EXPECT_EQ(w.b(0), 5);
    EXPECT_EQ(w.repeated(3).length(), 18);
}

TEST(CycleChainTest, FourCycleChainUsesFourCells)
{
    auto g = cycle(4);
    auto c = build_hom_k2(g, 2);
    auto chain = cycle_chain(c, around(4));
    EXPECT_EQ(nonzero(chain), 4);
    for (auto x : chain_boundary(c, chain))
        EXPECT_EQ(x, 0);
}

TEST(CycleChainTest, TwoLapsOfFiveCycleGenerate)
{
    auto g = cycle(5);
    auto c = build_hom_k2(g);
    H1Coordinates coords(c);
    ASSERT_EQ(coords.rank(), 1u);
    auto chain = cycle_chain(c, around(5, 2));
    // the 10-cycle complex: every edge cell is used once
    EXPECT_EQ(nonzero(chain), 10);
    for (auto x : chain.coeffs)
        EXPECT_LE(std::abs(x), 1);
    auto x = coords.of_chain(chain);
    EXPECT_NE(x[0], 0u);
}

TEST(CycleChainTest, BoundaryVanishesOnRandomWalks)
{
    Rng rng(77);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = erdos_renyi(7, 0.5, rng.next());
        if (g.edge_count() == 0)
            continue;
        auto c = build_hom_k2(g, 1);
        for (int j = 0 ; j < 5 ; ++j) {
            auto walk = random_even_closed_walk(g, rng, 16);
            ASSERT_TRUE(walk.has_value());
            auto chain = cycle_chain(c, *walk);
            for (auto b : chain_boundary(c, chain))
                EXPECT_EQ(b, 0);
        }
    }
}

TEST(CycleChainTest, BackAndForthWalkIsNullHomologous)
{
    auto g = cycle(5);
    auto c = build_hom_k2(g);
    H1Coordinates coords(c);
    auto x = coords.of_chain(cycle_chain(c, EvenClosedWalk{ { 0, 1 } }));
    EXPECT_EQ(x, std::vector<std::uint64_t>(1, 0));
}

TEST(SpanTest, Examples)
{
    auto c5 = h1_span_check(build_hom_k2(cycle(5), 2), 20);
    EXPECT_EQ(c5.free_rank, 1);
    EXPECT_TRUE(c5.spanned);
    auto k4 = h1_span_check(build_hom_k2(complete(4), 2), 16);
    EXPECT_EQ(k4.free_rank, 0);
    EXPECT_TRUE(k4.spanned);
    auto c6 = h1_span_check(build_hom_k2(cycle(6), 2), 24);
    EXPECT_EQ(c6.free_rank, 2);
    EXPECT_EQ(c6.span_rank, 2);
    EXPECT_TRUE(c6.spanned);
    auto c7 = h1_span_check(build_hom_k2(cycle(7), 2), 28);
    EXPECT_TRUE(c7.spanned);
}

TEST(SpanTest, FreeRankAgreesWithHomology)
{
    Rng rng(12);
    for (int trial = 0 ; trial < 15 ; ++trial) {
        auto g = erdos_renyi(7, 0.35, rng.next());
        if (g.edge_count() == 0)
            continue;
        auto c = build_hom_k2(g, 2);
        auto h = homology(c, 1);
        H1Coordinates coords(c);
        EXPECT_EQ(static_cast<long long>(coords.rank()), h1_free_rank(h));
        auto span = h1_span_check(c, 4 * g.size());
        EXPECT_EQ(span.free_rank, h1_free_rank(h));
        EXPECT_LE(span.span_rank, span.free_rank);
    }
}

TEST(ForcingTest, SixCycleGivesAlternatingSingletons)
{
    auto g = cycle(6);
    auto r = two_stable_witness_search(g, around(6));
    ASSERT_EQ(r.status, TwoStableSearch::Status::found) << r.reason;
    ASSERT_TRUE(r.family.has_value());
    EXPECT_TRUE(verify_stable_family(g, *r.family));
    for (int i = 0 ; i < 3 ; ++i) {
        EXPECT_EQ(r.a_sets[i].count(), 1);
        EXPECT_EQ(r.b_sets[i].count(), 1);
    }
}

TEST(ForcingTest, TwoLapsOfFiveCycle)
{
    auto g = cycle(5);
    auto r = two_stable_witness_search(g, around(5, 2));
    ASSERT_EQ(r.status, TwoStableSearch::Status::found) << r.reason;
    EXPECT_TRUE(verify_stable_family(g, *r.family));
}

TEST(ForcingTest, NullHomologousWalkRejected)
{
    EXPECT_THROW(two_stable_witness_search(cycle(5), EvenClosedWalk{ { 0, 1 } }), InputError);
    EXPECT_THROW(two_stable_witness_search(cycle(5), around(5)), InputError);
    EXPECT_THROW(two_stable_witness_search(complete(4), EvenClosedWalk{ { 0, 1, 2, 3 } }), InputError);
}

TEST(ForcingTest, LargerOddCyclesAndTheirMycielskians)
{
    for (int len : { 7, 9 }) {
        auto g = cycle(len);
        auto r = two_stable_witness_search(g, around(len, 2));
        ASSERT_EQ(r.status, TwoStableSearch::Status::found) << r.reason;
        EXPECT_TRUE(verify_stable_family(g, *r.family));
    }
}
