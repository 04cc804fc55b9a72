#include <warmthkit/experiments.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/generators.hh>

using namespace warmthkit;

using std::string;
using std::vector;

namespace
{
    auto wheel(int spokes) -> Graph
    {
        Graph g(spokes + 1);
        for (int i = 0 ; i < spokes ; ++i) {
            g.add_edge(i, (i + 1) % spokes);
            g.add_edge(i, spokes);
        }
        return g;
    }

    auto circulant(int n, const vector<int> & jumps) -> Graph
    {
        Graph g(n);
        for (int i = 0 ; i < n ; ++i)
            for (int j : jumps)
                g.add_edge(i, (i + j) % n);
        return g;
    }

    class CorpusBuilder
    {
    public:
        vector<CorpusEntry> entries;

        auto add(string name, Graph g, string generator, string params) -> void
        {
            if (g.edge_count() == 0)
                return;
            entries.push_back({ std::move(name), std::move(g), { std::move(generator), std::move(params), std::nullopt } });
        }

        auto add_random(string name, Graph g, string generator, string params, std::uint64_t seed) -> void
        {
            if (g.edge_count() == 0)
                return;
            entries.push_back({ std::move(name), std::move(g), { std::move(generator), std::move(params), seed } });
        }
    };
}

auto warmthkit::build_corpus(std::uint64_t seed) -> vector<CorpusEntry>
{
    CorpusBuilder c;
    for (int n = 2 ; n <= 7 ; ++n)
        c.add("K" + std::to_string(n), complete(n), "complete", "n=" + std::to_string(n));
    for (int n = 3 ; n <= 12 ; ++n)
        c.add("C" + std::to_string(n), cycle(n), "cycle", "m=" + std::to_string(n));
    for (int k = 2 ; k <= 8 ; ++k)
        c.add("P" + std::to_string(k), path(k), "path", "k=" + std::to_string(k));
    for (int a = 1 ; a <= 4 ; ++a)
        for (int b = a ; b <= 4 ; ++b)
            c.add("K" + std::to_string(a) + "," + std::to_string(b), complete_bipartite(a, b), "complete_bipartite",
                    "a=" + std::to_string(a) + ",b=" + std::to_string(b));
    for (int len = 2 ; len <= 12 ; len += 2)
        c.add("C" + std::to_string(len) + "o", looped_cycle(len), "looped_cycle", "length=" + std::to_string(len));
    for (auto [n, k] : vector<std::pair<int, int>>{ { 4, 1 }, { 5, 2 }, { 6, 2 }, { 6, 3 } })
        c.add("Kneser(" + std::to_string(n) + "," + std::to_string(k) + ")", kneser(n, k), "kneser",
                "n=" + std::to_string(n) + ",k=" + std::to_string(k));
    c.add("M(K2)", mycielski(complete(2)), "mycielski", "base=K2");
    c.add("M(K3)", mycielski(complete(3)), "mycielski", "base=K3");
    c.add("M(K4)", mycielski(complete(4)), "mycielski", "base=K4");
    c.add("M(C5)", mycielski(cycle(5)), "mycielski", "base=C5");
    c.add("M(C7)", mycielski(cycle(7)), "mycielski", "base=C7");
    c.add("M(P4)", mycielski(path(4)), "mycielski", "base=P4");
    c.add("M(C4)", mycielski(cycle(4)), "mycielski", "base=C4");
    for (int m = 1 ; m <= 8 ; ++m)
        c.add("T1," + std::to_string(m), twisted_toroidal(1, m), "twisted_toroidal", "k=1,m=" + std::to_string(m));
    c.add("T2,2", twisted_toroidal(2, 2), "twisted_toroidal", "k=2,m=2");
    for (int spokes = 4 ; spokes <= 9 ; ++spokes)
        c.add("W" + std::to_string(spokes), wheel(spokes), "wheel", "spokes=" + std::to_string(spokes));
    c.add("C8(1,2)", circulant(8, { 1, 2 }), "circulant", "n=8,jumps=1,2");
    c.add("C10(1,3)", circulant(10, { 1, 3 }), "circulant", "n=10,jumps=1,3");
    c.add("C11(1,2)", circulant(11, { 1, 2 }), "circulant", "n=11,jumps=1,2");
    c.add("C13(1,5)", circulant(13, { 1, 5 }), "circulant", "n=13,jumps=1,5");
    c.add("C5+C5", disjoint_union(cycle(5), cycle(5)), "disjoint_union", "C5,C5");
    c.add("K3+K2", disjoint_union(complete(3), complete(2)), "disjoint_union", "K3,K2");
    c.add("K4+K1", disjoint_union(complete(4), empty_graph(1)), "disjoint_union", "K4,K1");
    c.add("C7+P3", disjoint_union(cycle(7), path(3)), "disjoint_union", "C7,P3");

    // seeded random graphs fill the rest
    Rng rng(seed);
    const double densities[] = { 0.15, 0.25, 0.35, 0.5 };
    int index = 0;
    while (c.entries.size() < 200) {
        int n = 6 + static_cast<int>(rng.below(11));
        auto graph_seed = rng.next();
        if (index % 5 == 4) {
            DegreeSequence w;
            for (int i = 0 ; i < n ; ++i)
                w.w.push_back(1.0 + 4.0 / (1.0 + i));
            try {
                c.add_random("chung_lu#" + std::to_string(index), chung_lu(w, graph_seed), "chung_lu",
                        "n=" + std::to_string(n) + ",w=1+4/(1+i)", graph_seed);
            }
            catch (const InputError &) {
            }
        }
        else {
            double p = densities[index % 4];
            c.add_random("gnp#" + std::to_string(index), erdos_renyi(n, p, graph_seed), "gnp",
                    "n=" + std::to_string(n) + ",p=" + std::to_string(p).substr(0, 4), graph_seed);
        }
        ++index;
    }
    c.entries.erase(c.entries.begin() + 200, c.entries.end());
    return std::move(c.entries);
}
