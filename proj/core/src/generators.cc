#include <warmthkit/generators.hh>
#include <warmthkit/errors.hh>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace warmthkit;

using std::pair;
using std::vector;

namespace
{
    auto require(bool condition, const char * message) -> void
    {
        if (! condition)
            throw InputError(message);
    }

    auto int_power(int base, int exponent) -> long long
    {
        long long result = 1;
        for (int i = 0 ; i < exponent ; ++i) {
            result *= base;
            if (result > max_vertices)
                throw CapacityError("twisted toroidal graph exceeds the vertex limit");
        }
        return result;
    }
}

auto warmthkit::empty_graph(int n) -> Graph
{
    require(n >= 1, "empty_graph needs n >= 1");
    return Graph(n);
}

auto warmthkit::complete(int n) -> Graph
{
    require(n >= 1, "complete needs n >= 1");
    Graph g(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            g.add_edge(u, v);
    return g;
}

auto warmthkit::cycle(int m) -> Graph
{
    require(m >= 3, "cycle needs m >= 3");
    Graph g(m);
    for (int i = 0 ; i < m ; ++i)
        g.add_edge(i, (i + 1) % m);
    return g;
}

auto warmthkit::looped_cycle(int length) -> Graph
{
    require(length >= 2 && length % 2 == 0, "looped_cycle needs an even length >= 2");
    Graph g(length);
    for (int i = 0 ; i < length ; ++i) {
        g.add_edge(i, i);
        g.add_edge(i, (i + 1) % length);
    }
    return g;
}

auto warmthkit::complete_bipartite(int a, int b) -> Graph
{
    require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
    Graph g(a + b);
    for (int u = 0 ; u < a ; ++u)
        for (int v = 0 ; v < b ; ++v)
            g.add_edge(u, a + v);
    return g;
}

auto warmthkit::path(int k) -> Graph
{
    require(k >= 1, "path needs k >= 1");
    Graph g(k);
    for (int i = 0 ; i + 1 < k ; ++i)
        g.add_edge(i, i + 1);
    return g;
}

auto warmthkit::kneser(int n, int k) -> Graph
{
    require(k >= 1 && n >= 2 * k, "kneser needs n >= 2k >= 2");
    require(n <= 62, "kneser ground set too large");
    vector<std::uint64_t> subsets;
    vector<int> chosen(k);
    std::iota(chosen.begin(), chosen.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        for (int c : chosen)
            mask |= std::uint64_t{ 1 } << c;
        subsets.push_back(mask);
        if (subsets.size() > static_cast<std::size_t>(max_vertices))
            throw CapacityError("kneser graph exceeds the vertex limit");
        int i = k - 1;
        while (i >= 0 && chosen[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++chosen[i];
        for (int j = i + 1 ; j < k ; ++j)
            chosen[j] = chosen[j - 1] + 1;
    }
    Graph g(static_cast<int>(subsets.size()));
    for (std::size_t u = 0 ; u < subsets.size() ; ++u)
        for (std::size_t v = u + 1 ; v < subsets.size() ; ++v)
            if (! (subsets[u] & subsets[v]))
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

auto warmthkit::mycielski(const Graph & g) -> Graph
{
    require(g.loop_free(), "mycielski needs a loop-free graph");
    int n = g.size();
    Graph result(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        result.add_edge(u, v);
        result.add_edge(n + u, v);
        result.add_edge(u, n + v);
    }
    for (int v = 0 ; v < n ; ++v)
        result.add_edge(n + v, 2 * n);
    return result;
}

auto Z2Action::validate(const Graph & g) const -> void
{
    int n = g.size();
    if (static_cast<int>(perm.size()) != n)
        throw InputError("action has wrong size");
    for (int v = 0 ; v < n ; ++v) {
        if (perm[v] < 0 || perm[v] >= n)
            throw InputError("action maps outside the vertex set");
        if (perm[perm[v]] != v)
            throw InputError("action is not an involution");
    }
    for (auto [u, v] : g.edges())
        if (! g.adjacent(perm[u], perm[v]))
            throw InputError("action is not a graph automorphism");
}

auto Z2Action::trivial(int n) -> Z2Action
{
    Z2Action result;
    result.perm.resize(n);
    std::iota(result.perm.begin(), result.perm.end(), 0);
    return result;
}

auto Z2Action::swap() -> Z2Action
{
    return Z2Action{ { 1, 0 } };
}

auto Z2Action::antipodal(int length) -> Z2Action
{
    require(length >= 2 && length % 2 == 0, "antipodal action needs an even cycle");
    Z2Action result;
    for (int i = 0 ; i < length ; ++i)
        result.perm.push_back((i + length / 2) % length);
    return result;
}

auto warmthkit::twisted_product(const Graph & g, const Z2Action & act_g, const Graph & h, const Z2Action & act_h) -> TwistedProduct
{
    act_g.validate(g);
    act_h.validate(h);

    int gn = g.size(), hn = h.size();
    long long pairs = static_cast<long long>(gn) * hn;
    if (pairs > 2LL * max_vertices)
        throw CapacityError("twisted product exceeds the vertex limit");

    // classes are orbits of (g, h) -> (gamma g, gamma h); least index is the representative
    TwistedProduct result{ Graph(1), vector<int>(pairs, -1), { }, { }, hn };
    for (int a = 0 ; a < gn ; ++a)
        for (int b = 0 ; b < hn ; ++b) {
            int index = a * hn + b;
            if (result.quotient[index] != -1)
                continue;
            int partner = act_g(a) * hn + act_h(b);
            int id = static_cast<int>(result.representatives.size());
            result.quotient[index] = id;
            result.quotient[partner] = id;
            result.representatives.emplace_back(a, b);
        }

    result.graph = Graph(static_cast<int>(result.representatives.size()));
    auto g_edges = g.edges(), h_edges = h.edges();
    for (auto [a, a2] : g_edges)
        for (auto [b, b2] : h_edges) {
            result.graph.add_edge(result.class_of(a, b), result.class_of(a2, b2));
            result.graph.add_edge(result.class_of(a, b2), result.class_of(a2, b));
        }

    result.action.perm.resize(result.representatives.size());
    for (std::size_t c = 0 ; c < result.representatives.size() ; ++c) {
        auto [a, b] = result.representatives[c];
        result.action.perm[c] = result.class_of(act_g(a), b);
    }
    return result;
}

auto warmthkit::categorical_product(const Graph & g, const Graph & h) -> Graph
{
    return twisted_product(g, Z2Action::trivial(g.size()), h, Z2Action::trivial(h.size())).graph;
}

auto warmthkit::twisted_toroidal_index(int k, int m, int eps, vector<int> a) -> int
{
    long long index = 0;
    for (int i = 0 ; i < k ; ++i) {
        int x = ((a[i] % (2 * m)) + 2 * m) % (2 * m);
        if (x >= m) {
            x -= m;
            eps ^= 1;
        }
        index = index * m + x;
    }
    return static_cast<int>(eps * int_power(m, k) + index);
}

auto warmthkit::twisted_toroidal(int k, int m) -> Graph
{
    require(k >= 0 && m >= 1, "twisted_toroidal needs k >= 0 and m >= 1");
    auto half = int_power(m, k);
    Graph g(static_cast<int>(2 * half));

    vector<int> a(k), offset(k);
    for (int eps = 0 ; eps < 2 ; ++eps)
        for (long long rest = 0 ; rest < half ; ++rest) {
            long long r = rest;
            for (int i = k - 1 ; i >= 0 ; --i) {
                a[i] = static_cast<int>(r % m);
                r /= m;
            }
            int self = static_cast<int>(eps * half + rest);
            // every alpha in {-1, 0, 1}^k
            long long combos = int_power(3, k);
            for (long long c = 0 ; c < combos ; ++c) {
                long long t = c;
                for (int i = 0 ; i < k ; ++i) {
                    offset[i] = a[i] + static_cast<int>(t % 3) - 1;
                    t /= 3;
                }
                g.add_edge(self, twisted_toroidal_index(k, m, eps ^ 1, offset));
            }
        }
    return g;
}

auto warmthkit::twisted_toroidal_action(int k, int m) -> Z2Action
{
    auto half = static_cast<int>(int_power(m, k));
    Z2Action result;
    result.perm.resize(2 * half);
    for (int v = 0 ; v < 2 * half ; ++v)
        result.perm[v] = (v + half) % (2 * half);
    return result;
}

auto warmthkit::twisted_toroidal_recursive(int k, int m) -> TwistedProduct
{
    require(k >= 0 && m >= 1, "twisted_toroidal needs k >= 0 and m >= 1");
    TwistedProduct current{ complete(2), { 0, 1 }, { { 0, 0 }, { 1, 0 } }, Z2Action::swap(), 1 };
    auto factor = looped_cycle(2 * m);
    auto antipodal = Z2Action::antipodal(2 * m);
    for (int step = 0 ; step < k ; ++step)
        current = twisted_product(current.graph, current.action, factor, antipodal);
    return current;
}

auto Rng::below(std::uint64_t bound) -> std::uint64_t
{
    // Lemire-style rejection on the full 64-bit draw
    std::uint64_t limit = -bound % bound;
    while (true) {
        auto x = _engine();
        if (x >= limit)
            return x % bound;
    }
}

auto warmthkit::erdos_renyi(int n, double p, std::uint64_t seed) -> Graph
{
    require(n >= 1, "erdos_renyi needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "erdos_renyi needs 0 <= p <= 1");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (rng.uniform() < p)
                g.add_edge(u, v);
    return g;
}

auto DegreeSequence::validate() const -> void
{
    int n = static_cast<int>(w.size());
    require(n >= 1, "degree sequence is empty");
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (double x : w) {
        if (! std::isfinite(x) || x < 0.0 || x > n - 1)
            throw InputError("expected degree outside [0, n-1]");
        if (x * x > total * (1.0 + 1e-12))
            throw InputError("expected degree violates w_i^2 <= sum w");
    }
}

auto warmthkit::chung_lu(const DegreeSequence & weights, std::uint64_t seed) -> Graph
{
    weights.validate();
    int n = static_cast<int>(weights.w.size());
    double total = std::accumulate(weights.w.begin(), weights.w.end(), 0.0);
    Graph g(n);
    Rng rng(seed);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v) {
            double p = total > 0.0 ? weights.w[u] * weights.w[v] / total : 0.0;
            if (rng.uniform() < p)
                g.add_edge(u, v);
        }
    return g;
}
