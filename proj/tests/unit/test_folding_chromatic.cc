#include <warmthkit/chromatic.hh>
#include <warmthkit/folding.hh>
#include <warmthkit/generators.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

using namespace warmthkit;

namespace
{
    // every ordered pair (v, w), v != w, with N(v) inside N(w)
    auto has_any_fold(const Graph & g) -> bool
    {
        for (int v = 0 ; v < g.size() ; ++v)
            for (int w = 0 ; w < g.size() ; ++w)
                if (v != w && g.neighborhood(v).is_subset_of(g.neighborhood(w)))
                    return true;
        return false;
    }

    auto random_tree(int n, Rng & rng) -> Graph
    {
        Graph g(n);
        for (int v = 1 ; v < n ; ++v)
            g.add_edge(v, static_cast<int>(rng.below(v)));
        return g;
    }
}

TEST(FoldingTest, FindFoldExamples)
{
    auto fold = find_fold(path(3));
    ASSERT_TRUE(fold.has_value());
    EXPECT_EQ(fold->removed, 0);
    EXPECT_EQ(fold->absorber, 2);
    EXPECT_FALSE(find_fold(cycle(5)).has_value());
    EXPECT_FALSE(has_any_fold(cycle(5)));
}

TEST(FoldingTest, FoldOfLeafOntoSibling)
{
    // a pendant vertex hanging off a triangle folds onto the far corners of that triangle
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    auto fold = find_fold(g);
    ASSERT_TRUE(fold.has_value());
    EXPECT_TRUE(g.neighborhood(fold->removed).is_subset_of(g.neighborhood(fold->absorber)));
    auto r = stiff_reduction(g);
    EXPECT_EQ(r.graph, complete(3));
}

TEST(FoldingTest, StiffnessAgreesWithBruteForce)
{
    Rng rng(8);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        auto g = erdos_renyi(8, 0.4, rng.next());
        EXPECT_EQ(is_stiff(g), ! has_any_fold(g));
        auto r = stiff_reduction(g);
        EXPECT_FALSE(has_any_fold(r.graph));
        EXPECT_TRUE(valid_fold_sequence(g, r.folds));
        EXPECT_EQ(static_cast<int>(r.original.size()), r.graph.size());
        EXPECT_EQ(r.graph.size() + static_cast<int>(r.folds.steps.size()), g.size());
        // the residue is the subgraph induced on the surviving vertices
        EXPECT_EQ(g.induced_subgraph(r.original), r.graph);
    }
}

TEST(FoldingTest, TreesFoldToAnEdge)
{
    Rng rng(4);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        int n = 2 + static_cast<int>(rng.below(15));
        auto r = stiff_reduction(random_tree(n, rng));
        EXPECT_EQ(r.graph, complete(2));
    }
}

TEST(FoldingTest, StiffGraphsUnchanged)
{
    EXPECT_EQ(stiff_reduction(cycle(5)).graph, cycle(5));
    for (int n = 2 ; n <= 6 ; ++n)
        EXPECT_EQ(stiff_reduction(complete(n)).graph, complete(n));
}

TEST(FoldingTest, Dismantlability)
{
    Graph loop(1);
    loop.add_edge(0, 0);
    EXPECT_TRUE(is_dismantlable(loop));
    EXPECT_FALSE(is_dismantlable(looped_cycle(6)));
    EXPECT_FALSE(has_any_fold(looped_cycle(6)));
    for (int n = 2 ; n <= 5 ; ++n) {
        auto g = complete(n);
        for (int v = 0 ; v < n ; ++v)
            g.add_edge(v, v);
        EXPECT_TRUE(is_dismantlable(g));
    }
    auto looped_path = path(4);
    for (int v = 0 ; v < 4 ; ++v)
        looped_path.add_edge(v, v);
    EXPECT_TRUE(is_dismantlable(looped_path));
    EXPECT_FALSE(is_dismantlable(cycle(5)));
}

TEST(FoldingTest, InvalidSequencesRejected)
{
    FoldSequence bogus{ { { 0, 1 } } };
    EXPECT_FALSE(valid_fold_sequence(cycle(5), bogus));
}

TEST(ChromaticTest, KnownValues)
{
    for (int n = 1 ; n <= 7 ; ++n) {
        auto chi = chromatic_number(complete(n));
        EXPECT_TRUE(chi.exact);
        EXPECT_EQ(chi.hi, n);
    }
    EXPECT_EQ(chromatic_number(mycielski(cycle(5))).hi, 4);
    EXPECT_EQ(chromatic_number(kneser(5, 2)).hi, 3);
    EXPECT_EQ(chromatic_number(kneser(6, 2)).hi, 4);
    EXPECT_EQ(chromatic_number(cycle(7)).hi, 3);
    EXPECT_EQ(chromatic_number(cycle(8)).hi, 2);
    EXPECT_EQ(chromatic_number(empty_graph(3)).hi, 1);
}

TEST(ChromaticTest, LoopsGiveInfinity)
{
    auto chi = chromatic_number(looped_cycle(6));
    EXPECT_TRUE(chi.infinite);
}

TEST(ChromaticTest, MatchesBruteForceAndWitnessIsProper)
{
    Rng rng(21);
    for (int trial = 0 ; trial < 80 ; ++trial) {
        int n = 3 + static_cast<int>(rng.below(8));
        auto g = erdos_renyi(n, 0.2 + 0.1 * static_cast<double>(rng.below(6)), rng.next());
        auto chi = chromatic_number(g);
        ASSERT_TRUE(chi.exact);
        EXPECT_EQ(chi.hi, oracle::chromatic(g));
        EXPECT_EQ(chi.lo, chi.hi);
        EXPECT_TRUE(chi.witness.proper_for(g));
        EXPECT_EQ(chi.witness.k, chi.hi);
    }
}

TEST(ChromaticTest, TinyBudgetGivesHonestInterval)
{
    auto g = erdos_renyi(90, 0.5, 3);
    auto chi = chromatic_number(g, std::chrono::milliseconds(1));
    EXPECT_LE(chi.lo, chi.hi);
    EXPECT_TRUE(chi.witness.proper_for(g));
    if (! chi.exact) {
        EXPECT_LT(chi.lo, chi.hi);
    }
}
