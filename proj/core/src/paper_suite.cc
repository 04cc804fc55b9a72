#include <warmthkit/experiments.hh>
#include <warmthkit/chains.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/folding.hh>
#include <warmthkit/generators.hh>
#include <warmthkit/hom_complex.hh>

#include <json.hpp>

#include <chrono>
#include <atomic>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

using namespace warmthkit;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Outcome
    {
        bool passed = true;
        std::ostringstream detail;

        auto fail(const string & why) -> void
        {
            if (passed)
                detail.str("");
            passed = false;
            detail << why << "; ";
        }
    };

    auto exact_value(const WarmthResult & w) -> string
    {
        return w.to_string();
    }

    auto betti_string(const HomologySummary & h) -> string
    {
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0 ; i < h.betti.size() ; ++i)
            out << (i ? "," : "") << h.betti[i];
        out << ")";
        return out.str();
    }

    auto torsion_free(const HomologySummary & h) -> bool
    {
        for (auto & t : h.torsion)
            if (! t.empty())
                return false;
        return true;
    }

    // Betti and torsion with trailing zero groups dropped
    auto trimmed(const HomologySummary & h) -> std::pair<vector<long long>, vector<vector<std::int64_t>>>
    {
        auto b = h.betti;
        auto t = h.torsion;
        while (! b.empty() && b.back() == 0 && t.back().empty()) {
            b.pop_back();
            t.pop_back();
        }
        return { b, t };
    }

    // Equal through the range both summaries computed; a truncated summary says nothing above its range
    auto same_homology(const HomologySummary & x, const HomologySummary & y) -> bool
    {
        auto [bx, tx] = trimmed(x);
        auto [by, ty] = trimmed(y);
        if (! x.truncated && ! y.truncated)
            return bx == by && tx == ty;
        int common = std::min(x.computed_dim(), y.computed_dim());
        for (int k = 0 ; k <= common ; ++k)
            if (x.betti[k] != y.betti[k] || x.torsion[k] != y.torsion[k])
                return false;
        return true;
    }

    // Expensive shared state, filled on first use
    class SuiteState
    {
    private:
        std::optional<vector<CorpusEntry>> _corpus;
        std::optional<vector<InvariantReport>> _reports;

    public:
        auto corpus() -> const vector<CorpusEntry> &
        {
            if (! _corpus)
                _corpus = build_corpus();
            return *_corpus;
        }

        auto reports() -> const vector<InvariantReport> &
        {
            if (_reports)
                return *_reports;
            auto & entries = corpus();
            vector<InvariantReport> out(entries.size());
            std::atomic<std::size_t> next{ 0 };
            auto worker = [&] {
                for (std::size_t i ; (i = next++) < entries.size() ; )
                    out[i] = run_conjecture_check(entries[i].graph, entries[i].provenance);
            };
            int threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
            vector<std::thread> pool;
            for (int t = 1 ; t < threads ; ++t)
                pool.emplace_back(worker);
            worker();
            for (auto & t : pool)
                t.join();
            _reports = std::move(out);
            return *_reports;
        }
    };

    auto complete_graphs(SuiteState &, Outcome & o) -> void
    {
        for (int n = 3 ; n <= 5 ; ++n) {
            WarmthOptions opts;
            opts.mode = WarmthMode::exact;
            auto w = warmth(complete(n), opts);
            o.detail << "K" << n << ": " << exact_value(w) << "; ";
            if (! w.value() || *w.value() != n)
                o.fail("warmth of K" + std::to_string(n) + " is " + exact_value(w));
        }
    }

    auto sphere_homology(SuiteState &, Outcome & o) -> void
    {
        for (int n = 3 ; n <= 5 ; ++n) {
            auto h = hom_homology(complete(n));
            o.detail << "K" << n << ": " << betti_string(h) << "; ";
            vector<long long> expected(n - 1, 0);
            expected[0] += 1;
            expected[n - 2] += 1;
            if (h.truncated || h.betti != expected || ! torsion_free(h))
                o.fail("hom(K2,K" + std::to_string(n) + ") has Betti " + betti_string(h));
        }
    }

    auto edge_components(const Graph & g) -> int
    {
        auto comp = components(g);
        vector<bool> has_edge(g.size(), false);
        for (auto [u, v] : g.edges())
            has_edge[comp[u]] = true;
        int count = 0;
        for (bool e : has_edge)
            count += e;
        return count;
    }

    auto dichotomy(SuiteState & s, Outcome & o) -> void
    {
        int split = 0;
        for (auto & e : s.corpus()) {
            int b0 = skeleton_components(build_hom_k2(e.graph, 1));
            // isolated vertices carry no directed edge, so only components with an edge count
            bool predicted = is_bipartite(e.graph).bipartite || edge_components(e.graph) > 1;
            split += b0 > 1;
            if ((b0 > 1) != predicted)
                o.fail(e.name + ": b0 = " + std::to_string(b0) + " but bipartite-or-disconnected is "
                        + (predicted ? "true" : "false"));
        }
        if (o.passed)
            o.detail << s.corpus().size() << " graphs, " << split << " with b0 > 1";
    }

    auto grotzsch(SuiteState &, Outcome & o) -> void
    {
        auto g = mycielski(cycle(5));
        auto w = warmth(g);
        auto h = hom_homology(g);
        auto c = homological_connectivity(h);
        o.detail << "warmth " << exact_value(w) << ", Betti " << betti_string(h) << ", hconn " << c.value;
        if (! w.value() || *w.value() != 3)
            o.fail("warmth of the Groetzsch graph is " + exact_value(w));
        auto [b, t] = trimmed(h);
        if (h.truncated || b != vector<long long>{ 1, 0, 1 } || ! torsion_free(h))
            o.fail("homology is not that of S^2: " + betti_string(h));
        if (c.infinite || c.value != 1)
            o.fail("homological connectivity is " + std::to_string(c.value));
    }

    auto odd_cycles(SuiteState &, Outcome & o) -> void
    {
        for (int len : { 5, 7, 9 }) {
            auto g = cycle(len);
            auto w = warmth(g);
            auto h = hom_homology(g, 1);
            o.detail << "C" << len << ": " << exact_value(w) << ", b1 " << h1_free_rank(h) << "; ";
            if (! w.value() || *w.value() != 3)
                o.fail("warmth of C" + std::to_string(len) + " is " + exact_value(w));
            if (h1_free_rank(h) != 1)
                o.fail("b1 of C" + std::to_string(len) + " is " + std::to_string(h1_free_rank(h)));
        }
    }

    auto h1_implies_three(SuiteState & s, Outcome & o) -> void
    {
        auto & corpus = s.corpus();
        auto & reports = s.reports();
        int checked = 0;
        for (std::size_t i = 0 ; i < corpus.size() ; ++i) {
            auto & r = reports[i];
            if (! r.homology || r.homology->computed_dim() < 1 || r.homology->betti[1] < 1)
                continue;
            ++checked;
            if (r.free_h1 != Verdict::consistent)
                o.fail(corpus[i].name + ": b1 = " + std::to_string(r.homology->betti[1]) + ", warmth "
                        + (r.warmth ? r.warmth->to_string() : r.warmth_error) + " (" + to_string(r.free_h1) + ")");
        }
        if (o.passed)
            o.detail << checked << " graphs with b1 >= 1, all with warmth <= 3";
    }

    auto twisted_toroidal_values(SuiteState &, Outcome & o) -> void
    {
        auto small = warmth(twisted_toroidal(1, 5));
        o.detail << "T1,5: " << exact_value(small) << "; ";
        if (! small.value() || *small.value() != 3)
            o.fail("warmth of T1,5 is " + exact_value(small));

        // upper bound from the lifted orbit family, lower bound because T2,5 is connected and not bipartite
        auto [product, family] = twisted_toroidal_certificate(2, 5);
        WarmthOptions opts;
        opts.mode = WarmthMode::heuristic;
        opts.seeds = family.members;
        auto big = warmth(product.graph, opts);
        o.detail << "T2,5: " << exact_value(big) << " (" << big.method << "); ";
        if (! big.value() || *big.value() != 3)
            o.fail("warmth of T2,5 is " + exact_value(big));
        if (! verify_stable_family(product.graph, family))
            o.fail("T2,5 certificate does not verify");

        int checked = 0;
        for (int k = 1 ; k <= 3 ; ++k)
            for (int m = 1 ; m <= 7 ; ++m) {
                auto g = twisted_toroidal(k, m);
                int expected = 2 * static_cast<int>(std::lround(std::pow(m, k)));
                if (g.size() != expected)
                    o.fail("T" + std::to_string(k) + "," + std::to_string(m) + " has " + std::to_string(g.size())
                            + " vertices");
                // for m < 3 the neighbours a-1, a, a+1 of a looped cycle coincide
                if (m < 3)
                    continue;
                int degree = static_cast<int>(std::lround(std::pow(3, k)));
                for (int v = 0 ; v < g.size() ; ++v)
                    if (g.degree(v) != degree) {
                        o.fail("T" + std::to_string(k) + "," + std::to_string(m) + " is not "
                                + std::to_string(degree) + "-regular");
                        break;
                    }
                ++checked;
            }
        o.detail << "counts for k<=3, m<=7 and regularity on " << checked << " graphs";
    }

    auto bipartite_free(SuiteState & s, Outcome & o) -> void
    {
        auto & corpus = s.corpus();
        auto & reports = s.reports();
        int checked = 0, skipped_looped = 0;
        for (std::size_t i = 0 ; i < corpus.size() ; ++i) {
            auto & r = reports[i];
            if (! corpus[i].graph.loop_free()) {
                ++skipped_looped;
                continue;
            }
            for (auto & b : r.bipartite) {
                if (b.contains)
                    continue;
                ++checked;
                if (b.verdict != Verdict::consistent)
                    o.fail(corpus[i].name + ": no K" + std::to_string(b.a) + "," + std::to_string(b.b) + " but warmth "
                            + (r.warmth ? r.warmth->to_string() : r.warmth_error));
            }
        }
        if (o.passed)
            o.detail << checked << " free (graph, a, b) cases hold; " << skipped_looped << " looped graphs skipped";
    }

    auto fold_invariance(SuiteState &, Outcome & o) -> void
    {
        Rng rng(909);
        int sampled = 0, folded = 0;
        while (sampled < 50) {
            int n = 6 + static_cast<int>(rng.below(7));
            double p = 0.25 + 0.1 * static_cast<double>(rng.below(4));
            auto g = erdos_renyi(n, p, rng.next());
            if (g.edge_count() == 0 || ! is_connected(g))
                continue;
            ++sampled;
            auto reduced = stiff_reduction(g);
            folded += reduced.graph.size() < g.size();
            WarmthOptions opts;
            opts.fold = false;
            auto before = warmth(g, opts);
            auto after = warmth(reduced.graph, opts);
            if (before.to_string() != after.to_string())
                o.fail("sample " + std::to_string(sampled) + ": warmth " + before.to_string() + " vs "
                        + after.to_string());
            auto hb = hom_homology(g);
            auto ha = hom_homology(reduced.graph);
            if (! same_homology(hb, ha))
                o.fail("sample " + std::to_string(sampled) + ": homology " + betti_string(hb) + " vs " + betti_string(ha));
        }
        if (o.passed)
            o.detail << sampled << " connected samples, " << folded << " with a proper fold";
    }

    auto chain_cycles(SuiteState & s, Outcome & o) -> void
    {
        auto & corpus = s.corpus();
        Rng rng(1010);
        int walks = 0;
        for (std::size_t i = 0 ; walks < 100 ; i = (i + 7) % corpus.size()) {
            auto & g = corpus[i].graph;
            auto complex = build_hom_k2(g, 1);
            for (int j = 0 ; j < 2 && walks < 100 ; ++j) {
                auto walk = random_even_closed_walk(g, rng, 4 * g.size());
                if (! walk)
                    continue;
                ++walks;
                try {
                    auto chain = cycle_chain(complex, *walk);
                    for (auto x : chain_boundary(complex, chain))
                        if (x != 0) {
                            o.fail(corpus[i].name + ": boundary of c(gamma) is nonzero");
                            break;
                        }
                }
                catch (const StructuralError & e) {
                    o.fail(corpus[i].name + ": " + e.what());
                }
            }
        }
        o.detail << walks << " walks closed; ";
        vector<std::pair<string, Graph>> spans{ { "C5", cycle(5) }, { "C7", cycle(7) }, { "C4", cycle(4) },
            { "K4", complete(4) }, { "Groetzsch", mycielski(cycle(5)) } };
        for (auto & [name, g] : spans) {
            auto complex = build_hom_k2(g, 2);
            auto report = h1_span_check(complex, 4 * g.size());
            o.detail << name << " " << report.span_rank << "/" << report.free_rank << " ";
            if (! report.spanned)
                o.fail(name + ": walks span rank " + std::to_string(report.span_rank) + " of "
                        + std::to_string(report.free_rank) + (report.truncated ? " (truncated)" : ""));
        }
    }

    auto order_of_bounds(SuiteState & s, Outcome & o) -> void
    {
        auto & corpus = s.corpus();
        auto & reports = s.reports();
        int warmth_checked = 0, conn_checked = 0, caveat_skipped = 0;
        for (std::size_t i = 0 ; i < corpus.size() ; ++i) {
            auto & r = reports[i];
            auto & chi = r.chromatic;
            if (! chi.infinite && ! chi.exact)
                continue;
            if (r.warmth && r.warmth->exact()) {
                ++warmth_checked;
                if (! chi.infinite && (r.warmth->infinite || *r.warmth->hi > chi.hi))
                    o.fail(corpus[i].name + ": warmth " + r.warmth->to_string() + " above chi " + std::to_string(chi.hi));
            }
            if (r.connectivity && ! r.connectivity->truncated) {
                auto & c = *r.connectivity;
                if (c.caveat) {
                    ++caveat_skipped;
                    continue;
                }
                ++conn_checked;
                if (! chi.infinite && (c.infinite || c.value + 3 > chi.hi))
                    o.fail(corpus[i].name + ": hconn " + std::to_string(c.value) + " + 3 above chi "
                            + std::to_string(chi.hi));
            }
        }
        if (o.passed)
            o.detail << warmth_checked << " warmth and " << conn_checked << " caveat-clear connectivity checks; "
                     << caveat_skipped << " with caveat";
    }

    auto random_sweep(SuiteState &, Outcome & o) -> void
    {
        SweepSpec spec;
        spec.sizes = { 8, 12, 16 };
        spec.p = 0.5;
        spec.trials = 30;
        spec.seed = 12;
        spec.threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        auto first = run_random_sweep(spec);
        spec.threads = std::max(1, spec.threads / 2);
        auto second = run_random_sweep(spec);
        if (sweep_csv(first) != sweep_csv(second))
            o.fail("same seed gave different CSV");
        double previous = 0;
        for (auto & a : first.aggregates) {
            o.detail << "n=" << a.n << ": mean warmth " << a.warmth_mean << " (" << a.warmth_count << "), mean hconn "
                     << a.hconn_mean << " (" << a.hconn_count << "); ";
            if (a.warmth_count == 0)
                o.fail("no exact warmth at n=" + std::to_string(a.n));
            else if (a.warmth_mean < previous)
                o.fail("mean warmth drops at n=" + std::to_string(a.n));
            previous = a.warmth_mean;
        }
    }

    struct Criterion
    {
        const char * location;
        const char * title;
        double budget;
        void (* run)(SuiteState &, Outcome &);
    };

    const Criterion criteria[] = {
        { "complete graphs", "warmth of K3, K4, K5 is n", 10, complete_graphs },
        { "complete graphs", "hom(K2,Kn) is a homology sphere of dimension n-2", 30, sphere_homology },
        { "components", "b0 > 1 exactly for bipartite or disconnected graphs", 60, dichotomy },
        { "Groetzsch graph", "warmth 3, hconn 1, homology of S^2", 60, grotzsch },
        { "odd cycles", "warmth 3 and b1 = 1 for C5, C7, C9", 30, odd_cycles },
        { "free H1", "b1 >= 1 forces warmth <= 3 over the corpus", 180, h1_implies_three },
        { "twisted toroidal", "warmth 3 for T1,5 and T2,5; size and regularity", 180, twisted_toroidal_values },
        { "folds", "no K_{a,b} forces warmth <= a+b-1 over the corpus", 120, bipartite_free },
        { "folds", "warmth and homology unchanged by stiff reduction", 180, fold_invariance },
        { "walk chains", "c(gamma) is a cycle; walks span H1", 120, chain_cycles },
        { "bounds", "warmth <= chi and hconn + 3 <= chi", 180, order_of_bounds },
        { "random graphs", "sweep is deterministic with nondecreasing mean warmth", 240, random_sweep },
    };
}

auto warmthkit::run_paper_suite(const std::function<void(const SuiteRow &)> & progress) -> vector<SuiteRow>
{
    SuiteState state;
    vector<SuiteRow> rows;
    int id = 0;
    for (auto & c : criteria) {
        SuiteRow row;
        row.id = ++id;
        row.location = c.location;
        row.title = c.title;
        row.budget_seconds = c.budget;
        Outcome outcome;
        auto start = Clock::now();
        try {
            c.run(state, outcome);
        }
        catch (const std::exception & e) {
            outcome.fail(string("exception: ") + e.what());
        }
        row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (row.seconds > row.budget_seconds)
            outcome.fail("took " + std::to_string(row.seconds) + " s, over the budget");
        row.passed = outcome.passed;
        row.detail = outcome.detail.str();
        while (! row.detail.empty() && (row.detail.back() == ' ' || row.detail.back() == ';'))
            row.detail.pop_back();
        rows.push_back(row);
        if (progress)
            progress(row);
    }
    return rows;
}

auto warmthkit::suite_json(const vector<SuiteRow> & rows, int indent) -> string
{
    json out = json::array();
    for (auto & r : rows)
        out.push_back({ { "id", r.id }, { "location", r.location }, { "title", r.title }, { "passed", r.passed },
            { "detail", r.detail }, { "seconds", r.seconds }, { "budget_seconds", r.budget_seconds } });
    return out.dump(indent);
}
