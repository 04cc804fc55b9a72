#include <warmthkit/chromatic.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/generators.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <cmath>

using namespace warmthkit;

TEST(GeneratorsTest, BasicFamilies)
{
    EXPECT_EQ(complete(4).size(), 4);
    EXPECT_EQ(complete(4).edge_count(), 6);
    auto lc = looped_cycle(6);
    EXPECT_EQ(lc.size(), 6);
    EXPECT_EQ(lc.edge_count(), 12);
    EXPECT_EQ(lc.loop_count(), 6);
    auto k23 = complete_bipartite(2, 3);
    EXPECT_EQ(k23.size(), 5);
    EXPECT_EQ(k23.edge_count(), 6);
    EXPECT_EQ(path(4).edge_count(), 3);
    EXPECT_EQ(cycle(7).edge_count(), 7);
}

TEST(GeneratorsTest, ParameterChecks)
{
    EXPECT_THROW(complete(0), InputError);
    EXPECT_THROW(cycle(2), InputError);
    EXPECT_THROW(looped_cycle(5), InputError);
    EXPECT_THROW(path(0), InputError);
    EXPECT_THROW(complete_bipartite(0, 2), InputError);
    EXPECT_THROW(kneser(5, 3), InputError);
    EXPECT_THROW(mycielski(looped_cycle(4)), InputError);
    EXPECT_THROW(erdos_renyi(5, 1.5, 1), InputError);
}

TEST(GeneratorsTest, KneserGraphs)
{
    EXPECT_EQ(kneser(3, 1), complete(3));
    for (int n = 2 ; n <= 7 ; ++n)
        EXPECT_TRUE(oracle::isomorphism(kneser(n, 1), complete(n)).has_value());
    auto petersen = kneser(5, 2);
    EXPECT_EQ(petersen.size(), 10);
    EXPECT_EQ(petersen.edge_count(), 15);
    for (int v = 0 ; v < 10 ; ++v)
        EXPECT_EQ(petersen.degree(v), 3);
    auto k62 = kneser(6, 2);
    EXPECT_EQ(k62.size(), 15);
    for (int v = 0 ; v < 15 ; ++v)
        EXPECT_EQ(k62.degree(v), 6);
}

TEST(GeneratorsTest, Mycielski)
{
    auto grotzsch = mycielski(cycle(5));
    EXPECT_EQ(grotzsch.size(), 11);
    EXPECT_EQ(grotzsch.edge_count(), 20);
    EXPECT_TRUE(oracle::isomorphism(mycielski(complete(2)), cycle(5)).has_value());
    EXPECT_EQ(oracle::chromatic(grotzsch), 4);
    EXPECT_EQ(oracle::girth(grotzsch), 4);
}

TEST(GeneratorsTest, TrivialActionsGiveCategoricalProduct)
{
    auto g = cycle(5);
    auto h = complete(3);
    auto p = twisted_product(g, Z2Action::trivial(5), h, Z2Action::trivial(3));
    EXPECT_EQ(p.graph.size(), 15);
    for (int a = 0 ; a < 5 ; ++a)
        for (int b = 0 ; b < 3 ; ++b)
            for (int c = 0 ; c < 5 ; ++c)
                for (int d = 0 ; d < 3 ; ++d)
                    EXPECT_EQ(p.graph.adjacent(p.class_of(a, b), p.class_of(c, d)), g.adjacent(a, c) && h.adjacent(b, d));
    EXPECT_EQ(categorical_product(g, h), p.graph);
}

TEST(GeneratorsTest, QuotientIsHomomorphism)
{
    auto g = looped_cycle(8);
    auto h = looped_cycle(6);
    auto p = twisted_product(g, Z2Action::antipodal(8), h, Z2Action::antipodal(6));
    EXPECT_EQ(p.graph.size(), 24);
    for (int a = 0 ; a < 8 ; ++a)
        for (int b = 0 ; b < 6 ; ++b)
            for (int c = 0 ; c < 8 ; ++c)
                for (int d = 0 ; d < 6 ; ++d)
                    if (g.adjacent(a, c) && h.adjacent(b, d)) {
                        EXPECT_TRUE(p.graph.adjacent(p.class_of(a, b), p.class_of(c, d)));
                    }
    // (gamma g, h) and (g, gamma h) name the same vertex
    for (int a = 0 ; a < 8 ; ++a)
        for (int b = 0 ; b < 6 ; ++b)
            EXPECT_EQ(p.class_of((a + 4) % 8, b), p.class_of(a, (b + 3) % 6));
}

TEST(GeneratorsTest, InvalidActionsRejected)
{
    Z2Action not_involution{ { 1, 2, 0 } };
    EXPECT_THROW(twisted_product(complete(3), not_involution, complete(2), Z2Action::swap()), InputError);
    Z2Action not_automorphism{ { 1, 0, 2, 3 } };
    EXPECT_THROW(twisted_product(path(4), not_automorphism, complete(2), Z2Action::swap()), InputError);
}

TEST(GeneratorsTest, SmallTwistedToroidal)
{
    auto t13 = twisted_product(complete(2), Z2Action::swap(), looped_cycle(6), Z2Action::antipodal(6));
    EXPECT_EQ(t13.graph.size(), 6);
    EXPECT_TRUE(oracle::isomorphism(t13.graph, twisted_toroidal(1, 3)).has_value());
    EXPECT_EQ(twisted_toroidal(0, 4), complete(2));
    EXPECT_EQ(twisted_toroidal(0, 1), complete(2));
}

TEST(GeneratorsTest, ExplicitAndIteratedConstructionsAgree)
{
    for (int k = 1 ; k <= 2 ; ++k)
        for (int m = 1 ; m <= 5 ; ++m) {
            auto explicit_graph = twisted_toroidal(k, m);
            auto iterated = twisted_toroidal_recursive(k, m);
            EXPECT_TRUE(oracle::isomorphism(iterated.graph, explicit_graph).has_value()) << "k=" << k << " m=" << m;
        }
    EXPECT_TRUE(oracle::isomorphism(twisted_toroidal_recursive(3, 3).graph, twisted_toroidal(3, 3)).has_value());
}

TEST(GeneratorsTest, TwistedToroidalCounts)
{
    for (int k = 0 ; k <= 3 ; ++k)
        for (int m = 1 ; m <= 7 ; ++m) {
            auto g = twisted_toroidal(k, m);
            EXPECT_EQ(g.size(), 2 * static_cast<int>(std::lround(std::pow(m, k))));
            if (m < 3 && k > 0)
                continue;
            int degree = static_cast<int>(std::lround(std::pow(3, k)));
            for (int v = 0 ; v < g.size() ; ++v)
                EXPECT_EQ(g.degree(v), degree) << "k=" << k << " m=" << m;
        }
}

TEST(GeneratorsTest, TwistedToroidalIndexAndAction)
{
    int k = 2, m = 5;
    auto g = twisted_toroidal(k, m);
    auto act = twisted_toroidal_action(k, m);
    act.validate(g);
    // adding m to one coordinate and flipping eps is the identity on classes
    for (int eps = 0 ; eps < 2 ; ++eps)
        for (int a = 0 ; a < 2 * m ; ++a)
            for (int b = 0 ; b < 2 * m ; ++b) {
                int v = twisted_toroidal_index(k, m, eps, { a, b });
                EXPECT_EQ(v, twisted_toroidal_index(k, m, 1 - eps, { (a + m) % (2 * m), b }));
                EXPECT_EQ(v, twisted_toroidal_index(k, m, 1 - eps, { a, (b + m) % (2 * m) }));
                EXPECT_EQ(act(v), twisted_toroidal_index(k, m, 1 - eps, { a, b }));
            }
}

TEST(GeneratorsTest, ProductAssociativityOnSmallInstances)
{
    auto a = complete(2);
    auto b = looped_cycle(6);
    auto c = looped_cycle(4);
    auto ab = twisted_product(a, Z2Action::swap(), b, Z2Action::antipodal(6));
    auto left = twisted_product(ab.graph, ab.action, c, Z2Action::antipodal(4));
    auto bc = twisted_product(b, Z2Action::antipodal(6), c, Z2Action::antipodal(4));
    auto right = twisted_product(a, Z2Action::swap(), bc.graph, bc.action);
    EXPECT_TRUE(oracle::isomorphism(left.graph, right.graph).has_value());
}

TEST(GeneratorsTest, RandomGraphs)
{
    EXPECT_EQ(erdos_renyi(9, 0, 1).edge_count(), 0);
    EXPECT_EQ(erdos_renyi(9, 1, 1), complete(9));
    EXPECT_EQ(erdos_renyi(30, 0.4, 77), erdos_renyi(30, 0.4, 77));
    EXPECT_NE(erdos_renyi(30, 0.4, 77), erdos_renyi(30, 0.4, 78));
    int n = 1000;
    double mean = n * (n - 1) / 4.0;
    double sigma = std::sqrt(n * (n - 1) / 2.0 * 0.25);
    auto g = erdos_renyi(n, 0.5, 2024);
    EXPECT_LT(std::abs(g.edge_count() - mean), 4 * sigma);
    EXPECT_EQ(g.loop_count(), 0);
}

TEST(GeneratorsTest, ChungLu)
{
    DegreeSequence bad{ { 5, 1, 1 } };
    EXPECT_THROW(bad.validate(), InputError);
    EXPECT_THROW(chung_lu(bad, 1), InputError);
    // constant weights w give edge probability w / (n - 1) * (n - 1) / n = w / n
    int n = 200;
    double w = 20;
    DegreeSequence flat{ std::vector<double>(n, w) };
    long long total = 0;
    for (std::uint64_t seed = 0 ; seed < 5 ; ++seed)
        total += chung_lu(flat, seed).edge_count();
    double expected = 5 * (n * (n - 1) / 2.0) * (w / n);
    double sigma = std::sqrt(expected);
    EXPECT_LT(std::abs(total - expected), 4 * sigma);
}

TEST(GeneratorsTest, RngIsPortable)
{
    Rng a(42), b(42);
    for (int i = 0 ; i < 10 ; ++i)
        EXPECT_EQ(a.next(), b.next());
    // mt19937_64 reference value for the default seed 5489
    Rng reference(5489);
    EXPECT_EQ(reference.next(), 14514284786278117030ULL);
    Rng r(1);
    for (int i = 0 ; i < 1000 ; ++i) {
        auto x = r.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
        EXPECT_LT(r.below(7), 7u);
    }
}
