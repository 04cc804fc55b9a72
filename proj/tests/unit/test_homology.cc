#include <warmthkit/errors.hh>
#include <warmthkit/folding.hh>
#include <warmthkit/generators.hh>
#include <warmthkit/hom_complex.hh>
#include <warmthkit/homology.hh>
#include <warmthkit/sparse_matrix.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

using namespace warmthkit;

namespace
{
    auto mask(std::initializer_list<int> xs) -> std::uint64_t
    {
        std::uint64_t m = 0;
        for (int x : xs)
            m |= std::uint64_t{ 1 } << x;
        return m;
    }

    auto column(const CellComplex & c, int k, const Cell & cell) -> std::map<int, std::int64_t>
    {
        auto d = c.boundary(k);
        std::map<int, std::int64_t> out;
        for (auto [row, value] : d.columns[*c.index_of(cell)])
            out[row] = value;
        return out;
    }

    auto dense(std::vector<std::vector<std::int64_t>> rows) -> SparseMatrix
    {
        SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int j = 0 ; j < m.cols ; ++j)
            for (int i = 0 ; i < m.rows ; ++i)
                if (rows[i][j])
                    m.columns[j].push_back({ i, rows[i][j] });
        return m;
    }
}

TEST(SmithTest, RankAndTorsion)
{
    auto s = smith_summary(dense({ { 2, 0 }, { 0, 3 } }));
    EXPECT_EQ(s.rank, 2);
    EXPECT_EQ(s.torsion, (std::vector<std::int64_t>{ 6 }));
    auto t = smith_summary(dense({ { 2, 4 }, { 4, 8 } }));
    EXPECT_EQ(t.rank, 1);
    EXPECT_EQ(t.torsion, (std::vector<std::int64_t>{ 2 }));
    auto u = smith_summary(dense({ { 1, 1, 0 }, { 0, 1, 1 }, { 1, 0, 1 } }));
    EXPECT_EQ(u.rank, 3);
    EXPECT_EQ(u.torsion, (std::vector<std::int64_t>{ 2 }));
    EXPECT_EQ(smith_summary(SparseMatrix(3, 2)).rank, 0);
}

TEST(HomComplexTest, CellCounts)
{
    auto k4 = build_hom_k2(complete(4));
    EXPECT_EQ(k4.cell_count(0), 12);
    auto k2 = build_hom_k2(complete(2));
    EXPECT_EQ(k2.f_vector(), (std::vector<long long>{ 2 }));
    auto c5 = build_hom_k2(cycle(5));
    EXPECT_EQ(c5.f_vector(), (std::vector<long long>{ 10, 10 }));
    EXPECT_THROW(build_hom_k2(empty_graph(3)), InputError);
}

TEST(HomComplexTest, CellsMatchNaiveEnumeration)
{
    Rng rng(13);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto g = erdos_renyi(6, 0.5, rng.next());
        if (g.edge_count() == 0)
            continue;
        auto c = build_hom_k2(g);
        auto naive = oracle::cells(g);
        ASSERT_EQ(c.built_dim() + 1, static_cast<int>(naive.size()));
        for (int k = 0 ; k <= c.built_dim() ; ++k) {
            EXPECT_EQ(c.cell_count(k), static_cast<long long>(naive[k].size()));
            for (auto & cell : naive[k])
                EXPECT_TRUE(c.index_of({ cell.sigma, cell.tau }).has_value());
        }
        c.check_closed();
    }
}

TEST(HomComplexTest, BoundaryOfEdgeAndSquare)
{
    auto c = build_hom_k2(complete(4));
    // {0,2} x {1}: the edge from {0}x{1} to {2}x{1}
    auto edge = column(c, 1, { mask({ 0, 2 }), mask({ 1 }) });
    auto from = *c.index_of({ mask({ 0 }), mask({ 1 }) });
    auto to = *c.index_of({ mask({ 2 }), mask({ 1 }) });
    EXPECT_EQ(edge.size(), 2u);
    EXPECT_EQ(edge[to] - edge[from], 2);
    EXPECT_EQ(edge[to] + edge[from], 0);
    EXPECT_EQ(edge[to], 1);

    // {0,1} x {2,3}: four signed edges whose boundaries cancel
    auto sq = build_hom_k2(complete_bipartite(2, 2));
    auto square = column(sq, 2, { mask({ 0, 1 }), mask({ 2, 3 }) });
    EXPECT_EQ(square.size(), 4u);
    auto d1 = sq.boundary(1);
    std::map<int, std::int64_t> total;
    for (auto [e, coeff] : square) {
        EXPECT_EQ(std::abs(coeff), 1);
        for (auto [row, value] : d1.columns[e])
            total[row] += coeff * value;
    }
    for (auto [row, value] : total)
        EXPECT_EQ(value, 0);
    // the sigma faces carry opposite signs, as do the tau faces
    auto s0 = *sq.index_of({ mask({ 0 }), mask({ 2, 3 }) });
    auto s1 = *sq.index_of({ mask({ 1 }), mask({ 2, 3 }) });
    auto t0 = *sq.index_of({ mask({ 0, 1 }), mask({ 2 }) });
    auto t1 = *sq.index_of({ mask({ 0, 1 }), mask({ 3 }) });
    EXPECT_EQ(square[s0], -square[s1]);
    EXPECT_EQ(square[t0], -square[t1]);
}

TEST(HomComplexTest, BoundarySquaresVanish)
{
    EXPECT_TRUE(boundary_squares_vanish(build_hom_k2(complete(4))));
    EXPECT_TRUE(boundary_squares_vanish(build_hom_k2(complete(5))));
    EXPECT_TRUE(boundary_squares_vanish(build_hom_k2(mycielski(cycle(5)))));
    Rng rng(2);
    for (int trial = 0 ; trial < 10 ; ++trial) {
        auto g = erdos_renyi(8, 0.5, rng.next());
        if (g.edge_count()) {
            EXPECT_TRUE(boundary_squares_vanish(build_hom_k2(g)));
        }
    }
}

TEST(HomComplexTest, CorruptedSignConventionIsCaught)
{
    EXPECT_FALSE(boundary_squares_vanish(build_hom_k2(complete(4)), BoundaryConvention::unsigned_cross_term));
}

TEST(HomComplexTest, PartialBuildAndComponents)
{
    auto c = build_hom_k2(complete(5), 1);
    EXPECT_EQ(c.built_dim(), 1);
    EXPECT_EQ(c.top_dim(), 3);
    EXPECT_FALSE(c.complete());
    EXPECT_EQ(skeleton_components(build_hom_k2(cycle(6), 1)), 2);
    EXPECT_EQ(skeleton_components(build_hom_k2(cycle(5), 1)), 1);
}

TEST(HomologyTest, SpheresFromCompleteGraphs)
{
    for (int n = 3 ; n <= 6 ; ++n) {
        auto h = hom_homology(complete(n));
        std::vector<long long> expected(n - 1, 0);
        expected[0] += 1;
        expected[n - 2] += 1;
        EXPECT_EQ(h.betti, expected) << "n=" << n;
        for (auto & t : h.torsion)
            EXPECT_TRUE(t.empty());
        EXPECT_FALSE(h.truncated);
        EXPECT_EQ(euler_characteristic_matches(h), true);
        auto conn = homological_connectivity(h);
        EXPECT_EQ(conn.value, n - 3);
        EXPECT_FALSE(conn.infinite);
    }
}

TEST(HomologyTest, CyclesAndBipartite)
{
    auto c5 = hom_homology(cycle(5));
    EXPECT_EQ(c5.betti, (std::vector<long long>{ 1, 1 }));
    EXPECT_EQ(h1_free_rank(c5), 1);
    auto c6 = hom_homology(cycle(6));
    EXPECT_EQ(c6.betti[0], 2);
    EXPECT_EQ(h1_free_rank(c6), 2);
    // each component of hom(K2, C4) is filled in by a square {a,a'} x {b,b'}
    auto c4 = hom_homology(cycle(4));
    EXPECT_EQ(c4.betti[0], 2);
    EXPECT_EQ(h1_free_rank(c4), 0);
    EXPECT_EQ(homological_connectivity(hom_homology(complete_bipartite(2, 3))).value, -1);
    EXPECT_EQ(hom_homology(path(4)).betti[0], 2);
    EXPECT_EQ(h1_free_rank(hom_homology(complete(4))), 0);
}

TEST(HomologyTest, GrotzschIsTwoSphere)
{
    auto h = hom_homology(mycielski(cycle(5)));
    EXPECT_EQ(h.betti[0], 1);
    EXPECT_EQ(h.betti[1], 0);
    EXPECT_EQ(h.betti[2], 1);
    for (std::size_t k = 3 ; k < h.betti.size() ; ++k)
        EXPECT_EQ(h.betti[k], 0);
    auto conn = homological_connectivity(h);
    EXPECT_EQ(conn.value, 1);
    EXPECT_TRUE(conn.caveat);
    EXPECT_EQ(hom_connectivity(mycielski(cycle(5))).value, 1);
}

TEST(HomologyTest, BettiMatchesNaiveOracle)
{
    Rng rng(31);
    for (int trial = 0 ; trial < 25 ; ++trial) {
        int n = 4 + static_cast<int>(rng.below(3));
        auto g = erdos_renyi(n, 0.5, rng.next());
        if (trial % 4 == 0)
            g.add_edge(0, 0);
        if (g.edge_count() == 0)
            continue;
        auto h = hom_homology(g, 10);
        auto expected = oracle::betti(g);
        ASSERT_FALSE(h.truncated);
        EXPECT_EQ(h.betti, expected) << "trial " << trial;
    }
}

TEST(HomologyTest, TruncationIsReported)
{
    auto h = hom_homology(complete(6), 2);
    EXPECT_TRUE(h.truncated);
    EXPECT_EQ(h.computed_dim(), 2);
    EXPECT_EQ(euler_characteristic_matches(h), std::nullopt);
    auto conn = homological_connectivity(h);
    EXPECT_TRUE(conn.truncated);
}

TEST(HomologyTest, FoldsPreserveHomology)
{
    Rng rng(44);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto g = erdos_renyi(9, 0.35, rng.next());
        if (! is_connected(g))
            continue;
        auto r = stiff_reduction(g);
        auto a = hom_homology(g, 4);
        auto b = hom_homology(r.graph, 4);
        for (int k = 0 ; k <= std::min(a.computed_dim(), b.computed_dim()) ; ++k) {
            EXPECT_EQ(a.betti[k], b.betti[k]);
            EXPECT_EQ(a.torsion[k], b.torsion[k]);
        }
    }
}

TEST(HomologyTest, LoopedGraphs)
{
    // a looped vertex adjacent to everything makes hom(K2, G) a cone
    auto g = complete(4);
    g.add_edge(0, 0);
    auto h = hom_homology(g);
    EXPECT_EQ(h.betti[0], 1);
    for (std::size_t k = 1 ; k < h.betti.size() ; ++k)
        EXPECT_EQ(h.betti[k], 0);
    EXPECT_TRUE(homological_connectivity(h).infinite);
}
