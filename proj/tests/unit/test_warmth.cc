#include <warmthkit/chromatic.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/folding.hh>
#include <warmthkit/generators.hh>
#include <warmthkit/warmth.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <cmath>

using namespace warmthkit;

namespace
{
    auto set_of(int n, std::vector<int> xs) -> VertexSet { return VertexSet::from_list(n, xs); }

    auto exact_options() -> WarmthOptions
    {
        WarmthOptions o;
        o.mode = WarmthMode::exact;
        return o;
    }

    auto singletons(int n) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        for (int v = 0 ; v < n ; ++v)
            out.push_back(set_of(n, { v }));
        return out;
    }
}

TEST(StableFamilyTest, BipartiteOneStable)
{
    auto g = complete_bipartite(2, 3);
    auto f = d_stable_family_exists(g, 1);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(verify_stable_family(g, *f));
    auto p = is_bipartite(g);
    EXPECT_TRUE(f->contains(p.part(0)));
    EXPECT_TRUE(f->contains(p.part(1)));
}

TEST(StableFamilyTest, FiveCycleSingletons)
{
    auto g = cycle(5);
    auto f = d_stable_family_exists(g, 2);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(verify_stable_family(g, *f));
    for (int i = 0 ; i < 5 ; ++i) {
        EXPECT_TRUE(f->contains(set_of(5, { i })));
        EXPECT_EQ(g.neighborhood((i + 4) % 5) & g.neighborhood((i + 1) % 5), set_of(5, { i }));
    }
    EXPECT_FALSE(d_stable_family_exists(g, 1).has_value());
}

TEST(StableFamilyTest, CompleteGraphs)
{
    for (int n = 3 ; n <= 5 ; ++n) {
        auto g = complete(n);
        EXPECT_FALSE(d_stable_family_exists(g, n - 2).has_value());
        auto f = d_stable_family_exists(g, n - 1);
        ASSERT_TRUE(f.has_value());
        for (auto & s : singletons(n))
            EXPECT_TRUE(f->contains(s));
        EXPECT_TRUE(oracle::stable_family(g, n - 2).empty());
        EXPECT_FALSE(oracle::stable_family(g, n - 1).empty());
    }
}

TEST(StableFamilyTest, GreatestFamilyMatchesBruteForce)
{
    Rng rng(1234);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        auto g = erdos_renyi(n, 0.35 + 0.1 * static_cast<double>(rng.below(4)), rng.next());
        if (trial % 5 == 0)
            g.add_edge(1, 1);
        for (int d = 1 ; d <= 3 ; ++d) {
            auto expected = oracle::stable_family(g, d);
            auto found = d_stable_family_exists(g, d);
            ASSERT_EQ(found.has_value(), ! expected.empty()) << "trial " << trial << " d " << d;
            if (! found)
                continue;
            EXPECT_TRUE(verify_stable_family(g, *found));
            EXPECT_EQ(found->size(), expected.size());
            for (auto m : expected)
                EXPECT_TRUE(found->contains(VertexSet::from_mask(n, m)));
        }
    }
}

TEST(StableFamilyTest, DefectsAreReported)
{
    auto g = cycle(5);
    StableFamily f;
    f.d = 2;
    f.members = { set_of(5, { 0 }) };
    f.witnesses = { { 0, 0 } };
    EXPECT_FALSE(verify_stable_family(g, f));
    EXPECT_FALSE(stable_family_defect(g, f).empty());
    StableFamily full;
    full.d = 1;
    full.members = { VertexSet::full(5) };
    full.witnesses = { { 0 } };
    EXPECT_FALSE(verify_stable_family(g, full));
}

TEST(StableFamilyTest, ExactCapIsEnforced)
{
    StableSearchOptions opts;
    opts.exact_cap = 10;
    EXPECT_THROW(d_stable_family_exists(erdos_renyi(12, 0.5, 1), 2, opts), CapacityError);
    opts.mode = WarmthMode::heuristic;
    EXPECT_NO_THROW(d_stable_family_exists(erdos_renyi(12, 0.5, 1), 2, opts));
}

TEST(WarmthTest, KnownValues)
{
    for (int n = 3 ; n <= 6 ; ++n)
        EXPECT_EQ(warmth(complete(n), exact_options()).value(), n);
    EXPECT_EQ(warmth(mycielski(cycle(5))).value(), 3);
    EXPECT_EQ(warmth(cycle(5)).value(), 3);
    EXPECT_EQ(warmth(cycle(9)).value(), 3);
    EXPECT_EQ(warmth(kneser(5, 2)).value(), 3);
    EXPECT_EQ(warmth(kneser(6, 2)).value(), 3);
    EXPECT_EQ(warmth(complete_bipartite(3, 4)).value(), 2);
    EXPECT_EQ(warmth(cycle(8)).value(), 2);
    EXPECT_EQ(warmth(path(2)).value(), 2);
    EXPECT_EQ(warmth(disjoint_union(complete(4), complete(3))).value(), 2);
}

TEST(WarmthTest, GroetzschWithoutFolding)
{
    WarmthOptions o;
    o.fold = false;
    auto w = warmth(mycielski(cycle(5)), o);
    EXPECT_EQ(w.value(), 3);
    ASSERT_TRUE(w.certificate.has_value());
}

TEST(WarmthTest, DismantlableIsInfinite)
{
    auto g = path(4);
    for (int v = 0 ; v < 4 ; ++v)
        g.add_edge(v, v);
    auto w = warmth(g);
    EXPECT_TRUE(w.infinite);
    EXPECT_TRUE(w.exact());
    EXPECT_EQ(w.value(), std::nullopt);
    EXPECT_EQ(oracle::warmth(g), std::nullopt);
}

TEST(WarmthTest, EdgelessRejected)
{
    EXPECT_THROW(warmth(empty_graph(4)), InputError);
}

TEST(WarmthTest, ExactMatchesBruteForce)
{
    Rng rng(99);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        int n = 4 + static_cast<int>(rng.below(4));
        auto g = erdos_renyi(n, 0.3 + 0.1 * static_cast<double>(rng.below(5)), rng.next());
        if (trial % 6 == 0)
            g.add_edge(0, 0);
        if (g.edge_count() == 0)
            continue;
        auto expected = oracle::warmth(g);
        for (bool fold : { true, false }) {
            WarmthOptions o;
            o.fold = fold;
            auto w = warmth(g, o);
            ASSERT_TRUE(w.exact()) << "trial " << trial;
            EXPECT_EQ(w.value(), expected) << "trial " << trial << " fold " << fold;
            EXPECT_EQ(w.infinite, ! expected.has_value());
        }
    }
}

TEST(WarmthTest, CertificatesVerifyOnTheirSubgraph)
{
    Rng rng(5);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto g = erdos_renyi(9 + static_cast<int>(rng.below(6)), 0.4, rng.next());
        if (g.edge_count() == 0)
            continue;
        auto w = warmth(g);
        if (! w.certificate)
            continue;
        auto sub = g.induced_subgraph(w.certificate_vertices);
        EXPECT_TRUE(verify_stable_family(sub, *w.certificate));
        EXPECT_EQ(w.certificate->d + 1, *w.hi);
    }
}

TEST(WarmthTest, NeverAboveChromaticNumber)
{
    Rng rng(6);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = erdos_renyi(8 + static_cast<int>(rng.below(8)), 0.5, rng.next());
        if (g.edge_count() == 0)
            continue;
        auto w = warmth(g);
        auto chi = chromatic_number(g);
        ASSERT_TRUE(w.exact());
        EXPECT_LE(*w.value(), chi.hi);
    }
}

TEST(WarmthTest, HeuristicIsAnUpperBound)
{
    Rng rng(7);
    for (int trial = 0 ; trial < 25 ; ++trial) {
        auto g = erdos_renyi(10, 0.5, rng.next());
        if (g.edge_count() == 0)
            continue;
        auto exact = warmth(g);
        WarmthOptions o;
        o.mode = WarmthMode::heuristic;
        auto heuristic = warmth(g, o);
        EXPECT_EQ(heuristic.mode, WarmthMode::heuristic);
        EXPECT_LE(heuristic.lo, *exact.value());
        if (heuristic.hi) {
            EXPECT_GE(*heuristic.hi, *exact.value());
        }
    }
}

TEST(WarmthTest, CapsAndBudgets)
{
    WarmthOptions o;
    o.exact_cap = 8;
    EXPECT_THROW(warmth(complete(10), o), CapacityError);
    WarmthOptions capped;
    capped.d_cap = 2;
    auto w = warmth(complete(5), capped);
    EXPECT_FALSE(w.exact());
    EXPECT_EQ(w.lo, 4);
    EXPECT_EQ(w.hi, 5);
    WarmthOptions hurried;
    hurried.budget = std::chrono::milliseconds(1);
    auto b = warmth(erdos_renyi(20, 0.5, 5), hurried);
    if (b.budget_exhausted) {
        EXPECT_EQ(b.method, "budget");
        EXPECT_FALSE(b.exact());
    }
}

TEST(WarmthTest, SmallTwistedToroidal)
{
    for (int m = 5 ; m <= 7 ; ++m)
        EXPECT_EQ(warmth(twisted_toroidal(1, m)).value(), 3) << "m=" << m;
}

TEST(WitnessTest, MinimalWitnessSize)
{
    auto g = cycle(5);
    auto fam = singletons(5);
    EXPECT_EQ(minimal_witness_size(g, fam, set_of(5, { 2 })), 2);
    auto k = complete_bipartite(2, 3);
    auto p = is_bipartite(k);
    EXPECT_EQ(minimal_witness_size(k, { p.part(0), p.part(1) }, p.part(1)), 1);
    EXPECT_EQ(minimal_witness_size(g, { set_of(5, { 0 }) }, set_of(5, { 0 })), std::nullopt);
}

TEST(WitnessTest, GeneratedByAtMost)
{
    auto c5 = cycle(5);
    EXPECT_EQ(generated_by_at_most(c5, 0, 2), set_of(5, { 1, 4 }));
    EXPECT_EQ(generated_by_at_most(complete(4), 0, 2), std::nullopt);
    EXPECT_EQ(generated_by_at_most(complete(4), 0, 3), set_of(4, { 1, 2, 3 }));
    for (int n = 3 ; n <= 6 ; ++n) {
        auto all = VertexSet::full(n);
        all.reset(1);
        EXPECT_EQ(generated_by_at_most(complete(n), 1, n - 1), all);
    }
    // brute force over subsets of N(v)
    Rng rng(3);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        int n = 7;
        auto g = erdos_renyi(n, 0.5, rng.next());
        for (int v = 0 ; v < n ; ++v) {
            auto nv = g.neighborhood(v).members();
            int best = -1;
            for (unsigned s = 1 ; s < (1u << nv.size()) ; ++s) {
                VertexSet common = VertexSet::full(n);
                for (std::size_t i = 0 ; i < nv.size() ; ++i)
                    if (s >> i & 1)
                        common &= g.neighborhood(nv[i]);
                if (common == set_of(n, { v }) || (common.count() == 1 && common.test(v))) {
                    int size = std::popcount(s);
                    if (best < 0 || size < best)
                        best = size;
                }
            }
            for (int k = 1 ; k <= 4 ; ++k) {
                auto got = generated_by_at_most(g, v, k);
                EXPECT_EQ(got.has_value(), best > 0 && best <= k) << "trial " << trial << " v " << v << " k " << k;
                if (got) {
                    EXPECT_LE(got->count(), k);
                    EXPECT_TRUE(got->is_subset_of(g.neighborhood(v)));
                    EXPECT_EQ(g.common_neighborhood(*got), set_of(n, { v }));
                }
            }
        }
    }
}

TEST(CompleteBipartiteTest, Examples)
{
    auto c4 = find_complete_bipartite(cycle(4), 2, 2);
    ASSERT_TRUE(c4.has_value());
    auto p = is_bipartite(cycle(4));
    EXPECT_TRUE((c4->first == p.part(0) && c4->second == p.part(1)) || (c4->first == p.part(1) && c4->second == p.part(0)));
    EXPECT_FALSE(find_complete_bipartite(kneser(5, 2), 2, 2).has_value());
    auto k5 = find_complete_bipartite(complete(5), 2, 3);
    ASSERT_TRUE(k5.has_value());
    EXPECT_EQ(k5->first.count(), 2);
    EXPECT_EQ(k5->second.count(), 3);
    EXPECT_FALSE(k5->first.intersects(k5->second));
}

TEST(CompleteBipartiteTest, MatchesExhaustiveSearch)
{
    Rng rng(10);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        int n = 6 + static_cast<int>(rng.below(5));
        auto g = erdos_renyi(n, 0.4 + 0.05 * static_cast<double>(rng.below(5)), rng.next());
        if (trial % 7 == 0)
            g.add_edge(2, 2);
        for (auto [a, b] : std::vector<std::pair<int, int>>{ { 2, 2 }, { 2, 3 }, { 3, 2 }, { 3, 3 }, { 1, 4 } }) {
            auto found = find_complete_bipartite(g, a, b);
            EXPECT_EQ(found.has_value(), oracle::has_complete_bipartite(g, a, b));
            if (found) {
                EXPECT_EQ(found->first.count(), a);
                EXPECT_EQ(found->second.count(), b);
                EXPECT_FALSE(found->first.intersects(found->second));
                found->first.for_each([&] (int x) {
                    found->second.for_each([&] (int y) { EXPECT_TRUE(g.adjacent(x, y)); });
                });
            }
        }
    }
}

TEST(CertificateTest, GirthFamily)
{
    auto f = girth_family(kneser(5, 2));
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(verify_stable_family(kneser(5, 2), *f));
    EXPECT_FALSE(girth_family(complete(4)).has_value());
}

TEST(CertificateTest, CycleAndOrbitFamilies)
{
    auto cyc = looped_cycle(10);
    auto singles = cycle_singleton_family(cyc);
    EXPECT_TRUE(verify_stable_family(cyc, singles));
    auto act = Z2Action::antipodal(10);
    EXPECT_EQ(action_displacement(cyc, act), 5);
    auto orbits = orbit_family(cyc, singles, act);
    EXPECT_EQ(orbits.size(), 5u);
    EXPECT_TRUE(verify_stable_family(cyc, orbits));
    // displacement 4 is too small for the orbit construction
    auto short_cycle = looped_cycle(8);
    EXPECT_THROW(orbit_family(short_cycle, cycle_singleton_family(short_cycle), Z2Action::antipodal(8)), InputError);
    EXPECT_THROW(cycle_singleton_family(looped_cycle(4)), InputError);
}

TEST(CertificateTest, TwistedToroidalFamilies)
{
    for (auto [k, m] : std::vector<std::pair<int, int>>{ { 1, 5 }, { 1, 6 }, { 2, 5 }, { 2, 6 } }) {
        auto [product, family] = twisted_toroidal_certificate(k, m);
        EXPECT_EQ(product.graph.size(), 2 * static_cast<int>(std::lround(std::pow(m, k))));
        EXPECT_TRUE(verify_stable_family(product.graph, family));
        EXPECT_EQ(family.d, 2);
        if (k == 1) {
            EXPECT_TRUE(oracle::isomorphism(product.graph, twisted_toroidal(k, m)).has_value());
        }
    }
    EXPECT_THROW(twisted_toroidal_certificate(1, 4), InputError);
}

TEST(CertificateTest, TwoTwistWarmthThreeFromLiftedSeeds)
{
    auto [product, family] = twisted_toroidal_certificate(2, 5);
    WarmthOptions o;
    o.mode = WarmthMode::heuristic;
    o.seeds = family.members;
    auto w = warmth(product.graph, o);
    EXPECT_EQ(w.value(), 3);
    EXPECT_EQ(w.lo, 3);
}
