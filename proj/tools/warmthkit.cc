#include <warmthkit/chains.hh>
#include <warmthkit/chromatic.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/experiments.hh>
#include <warmthkit/folding.hh>
#include <warmthkit/generators.hh>
#include <warmthkit/graph_io.hh>
#include <warmthkit/hom_complex.hh>
#include <warmthkit/homology.hh>
#include <warmthkit/warmth.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace warmthkit;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    enum Exit { ok = 0, criterion_failure = 1, input_error = 2, budget_only = 3 };

    struct Globals
    {
        bool json = false;
        std::uint64_t seed = 1;
        long long budget_ms = 0;
        int threads = 1;
    };

    auto split(const string & s, char sep) -> vector<string>
    {
        vector<string> out;
        std::stringstream in(s);
        string part;
        while (std::getline(in, part, sep))
            out.push_back(part);
        return out;
    }

    auto to_int(const string & s) -> int
    {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        }
        catch (const std::exception &) {
            throw InputError("expected an integer, got '" + s + "'");
        }
        if (used != s.size())
            throw InputError("expected an integer, got '" + s + "'");
        return v;
    }

    auto to_double(const string & s) -> double
    {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        }
        catch (const std::exception &) {
            throw InputError("expected a number, got '" + s + "'");
        }
        if (used != s.size())
            throw InputError("expected a number, got '" + s + "'");
        return v;
    }

    const char * family_help =
        "Graph families: complete:n  cycle:m  path:k  looped-cycle:len  complete-bipartite:a,b  kneser:n,k\n"
        "  mycielski-cycle:m  mycielski-complete:n  grotzsch  petersen  twisted-toroidal:k,m\n"
        "  gnp:n,p  chung-lu:n,avg,beta  (random families use --seed)\n"
        "Anything that names an existing file is read as a graph file; '-' reads an edge list from stdin.";

    auto generate(const string & spec, std::uint64_t seed) -> std::pair<Graph, Provenance>
    {
        auto colon = spec.find(':');
        string name = spec.substr(0, colon);
        vector<string> args = colon == string::npos ? vector<string>{} : split(spec.substr(colon + 1), ',');
        auto want = [&] (std::size_t count) {
            if (args.size() != count)
                throw InputError("family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
        };
        string params = colon == string::npos ? "" : spec.substr(colon + 1);
        auto plain = [&] (Graph g) { return std::make_pair(std::move(g), Provenance{ name, params, std::nullopt }); };

        if (name == "complete") { want(1); return plain(complete(to_int(args[0]))); }
        if (name == "cycle") { want(1); return plain(cycle(to_int(args[0]))); }
        if (name == "path") { want(1); return plain(path(to_int(args[0]))); }
        if (name == "looped-cycle") { want(1); return plain(looped_cycle(to_int(args[0]))); }
        if (name == "complete-bipartite") { want(2); return plain(complete_bipartite(to_int(args[0]), to_int(args[1]))); }
        if (name == "kneser") { want(2); return plain(kneser(to_int(args[0]), to_int(args[1]))); }
        if (name == "mycielski-cycle") { want(1); return plain(mycielski(cycle(to_int(args[0])))); }
        if (name == "mycielski-complete") { want(1); return plain(mycielski(complete(to_int(args[0])))); }
        if (name == "grotzsch") { want(0); return plain(mycielski(cycle(5))); }
        if (name == "petersen") { want(0); return plain(kneser(5, 2)); }
        if (name == "twisted-toroidal") { want(2); return plain(twisted_toroidal(to_int(args[0]), to_int(args[1]))); }
        if (name == "gnp") {
            want(2);
            return { erdos_renyi(to_int(args[0]), to_double(args[1]), seed), { "gnp", params, seed } };
        }
        if (name == "chung-lu") {
            want(3);
            SweepSpec s;
            s.model = RandomModel::chung_lu;
            s.average_degree = to_double(args[1]);
            s.beta = to_double(args[2]);
            return { sweep_graph(s, to_int(args[0]), seed), { "chung-lu", params, seed } };
        }
        throw InputError("unknown graph family '" + name + "'");
    }

    auto load(const string & source, std::uint64_t seed) -> std::pair<Graph, Provenance>
    {
        if (source == "-")
            return { read_graph(std::cin, GraphFormat::edge_list), { "file", "stdin", std::nullopt } };
        if (std::filesystem::is_regular_file(source)) {
            auto g = read_graph_file(source);
            return { g, { "file", source, std::nullopt } };
        }
        return generate(source, seed);
    }

    // one JSON document per line; certificates can run to thousands of members
    auto print(const Globals &, const json & j) -> void
    {
        std::cout << j.dump() << "\n";
    }

    auto edges_json(const Graph & g) -> json
    {
        json out = json::array();
        for (auto [u, v] : g.edges())
            out.push_back({ u, v });
        return out;
    }

    auto warmth_json(const WarmthResult & w) -> json
    {
        json out{
            { "value", w.infinite ? json("inf") : (w.exact() ? json(*w.hi) : json(nullptr)) },
            { "lo", w.lo },
            { "hi", w.infinite ? json("inf") : (w.hi ? json(*w.hi) : json(nullptr)) },
            { "exact", w.exact() },
            { "mode", to_string(w.mode) },
            { "method", w.method },
            { "budget_exhausted", w.budget_exhausted },
        };
        if (w.certificate) {
            json members = json::array();
            for (std::size_t i = 0 ; i < w.certificate->size() ; ++i)
                members.push_back({ { "set", w.certificate->members[i].members() },
                    { "witnesses", w.certificate->witnesses[i] } });
            out["certificate"] = { { "d", w.certificate->d }, { "vertices", w.certificate_vertices }, { "members", members } };
        }
        return out;
    }

    auto run_gen(const Globals & globals, const string & source, const string & format, const string & output) -> int
    {
        auto [g, prov] = load(source, globals.seed);
        if (globals.json) {
            print(globals, { { "id", canonical_hash_hex(g) }, { "generator", prov.generator }, { "params", prov.params },
                { "seed", prov.seed ? json(*prov.seed) : json(nullptr) }, { "n", g.size() }, { "edges", edges_json(g) } });
            return ok;
        }
        auto fmt = parse_graph_format(format);
        if (output.empty())
            write_graph(std::cout, g, fmt);
        else
            write_graph_file(output, g, fmt);
        return ok;
    }

    auto run_fold(const Globals & globals, const string & source) -> int
    {
        auto [g, prov] = load(source, globals.seed);
        auto r = stiff_reduction(g);
        bool dismantlable = r.graph.size() == 1 && r.graph.has_loop(0);
        json steps = json::array();
        for (auto & f : r.folds.steps)
            steps.push_back({ { "removed", f.removed }, { "absorber", f.absorber } });
        json out{ { "n", g.size() }, { "residue_n", r.graph.size() }, { "residue_edges", edges_json(r.graph) },
            { "original", r.original }, { "folds", steps }, { "dismantlable", dismantlable } };
        if (globals.json) {
            print(globals, out);
            return ok;
        }
        std::cout << "folds: " << r.folds.steps.size() << "\n";
        for (auto & f : r.folds.steps)
            std::cout << "  " << f.removed << " -> " << f.absorber << "\n";
        std::cout << "residue: " << r.graph.size() << " vertices, " << r.graph.edge_count() << " edges"
                  << (dismantlable ? " (dismantlable)" : "") << "\n";
        write_graph(std::cout, r.graph, GraphFormat::edge_list);
        return ok;
    }

    struct WarmthArgs
    {
        string mode = "exact";
        int max_d = 0;
        bool no_fold = false;
        int exact_cap = default_exact_cap;
    };

    auto run_warmth(const Globals & globals, const string & source, const WarmthArgs & args) -> int
    {
        auto [g, prov] = load(source, globals.seed);
        WarmthOptions opts;
        if (args.mode == "exact")
            opts.mode = WarmthMode::exact;
        else if (args.mode == "heuristic")
            opts.mode = WarmthMode::heuristic;
        else
            throw InputError("mode must be exact or heuristic");
        if (args.max_d > 0)
            opts.d_cap = args.max_d;
        opts.fold = ! args.no_fold;
        opts.exact_cap = args.exact_cap;
        opts.budget = std::chrono::milliseconds(globals.budget_ms);
        auto w = warmth(g, opts);
        if (globals.json)
            print(globals, warmth_json(w));
        else
            std::cout << "warmth " << w.to_string() << " (" << to_string(w.mode) << ", " << w.method << ")\n";
        return w.budget_exhausted && ! w.exact() ? budget_only : ok;
    }

    auto run_homology(const Globals & globals, const string & source, int max_dim, bool f_vector, bool no_fold) -> int
    {
        auto [g, prov] = load(source, globals.seed);
        if (g.edge_count() == 0)
            throw InputError("hom(K2, G) is empty for an edgeless graph");
        Graph target = no_fold ? g : stiff_reduction(g).graph;
        auto h = hom_homology(target, max_dim >= 0 ? std::optional<int>(max_dim) : std::nullopt);
        auto c = homological_connectivity(h);
        json out{ { "betti", h.betti }, { "torsion", h.torsion }, { "top_dim", h.top_dim }, { "truncated", h.truncated },
            { "folded_n", target.size() },
            { "connectivity", { { "value", c.infinite ? json("inf") : json(c.value) }, { "caveat", c.caveat },
                { "truncated", c.truncated } } } };
        if (f_vector)
            out["f_vector"] = h.f_vector;
        if (globals.json) {
            print(globals, out);
            return ok;
        }
        for (std::size_t k = 0 ; k < h.betti.size() ; ++k) {
            std::cout << "H" << k << ": Z^" << h.betti[k];
            for (auto t : h.torsion[k])
                std::cout << " + Z/" << t;
            std::cout << "\n";
        }
        if (f_vector) {
            std::cout << "f-vector:";
            for (auto f : h.f_vector)
                std::cout << " " << f;
            std::cout << "\n";
        }
        std::cout << "hconn " << (c.infinite ? string("inf") : std::to_string(c.value)) << (c.caveat ? " (caveat: pi_1 unchecked)" : "")
                  << (c.truncated ? " (truncated)" : "") << "\n";
        return ok;
    }

    auto run_chromatic(const Globals & globals, const string & source) -> int
    {
        auto [g, prov] = load(source, globals.seed);
        auto budget = std::chrono::milliseconds(globals.budget_ms > 0 ? globals.budget_ms : 10000);
        auto chi = chromatic_number(g, budget);
        if (globals.json)
            print(globals, { { "value", chi.infinite ? json("inf") : (chi.exact ? json(chi.hi) : json(nullptr)) },
                { "lo", chi.lo }, { "hi", chi.hi }, { "exact", chi.exact || chi.infinite }, { "infinite", chi.infinite },
                { "coloring", chi.witness.colors }, { "nodes", chi.nodes } });
        else if (chi.infinite)
            std::cout << "chi inf (graph has a loop)\n";
        else if (chi.exact)
            std::cout << "chi " << chi.hi << "\n";
        else
            std::cout << "chi in [" << chi.lo << ", " << chi.hi << "] (budget exhausted)\n";
        return chi.infinite || chi.exact ? ok : budget_only;
    }

    auto report_options(const Globals & globals) -> ReportOptions
    {
        ReportOptions opts;
        if (globals.budget_ms > 0) {
            opts.warmth.budget = std::chrono::milliseconds(globals.budget_ms);
            opts.chromatic_budget = std::chrono::milliseconds(globals.budget_ms);
        }
        return opts;
    }

    auto verdict_exit(const vector<InvariantReport> & reports) -> int
    {
        bool violated = false, inconclusive = false;
        for (auto & r : reports) {
            violated |= r.any_violation();
            inconclusive |= r.any_inconclusive();
        }
        return violated ? criterion_failure : (inconclusive ? budget_only : ok);
    }

    auto run_conjecture(const Globals & globals, const vector<string> & sources, bool corpus, bool csv) -> int
    {
        vector<std::pair<Graph, Provenance>> inputs;
        if (corpus)
            for (auto & e : build_corpus())
                inputs.emplace_back(e.graph, e.provenance);
        for (auto & s : sources)
            inputs.push_back(load(s, globals.seed));
        if (inputs.empty())
            throw InputError("give at least one graph or --corpus");

        auto opts = report_options(globals);
        vector<InvariantReport> reports(inputs.size());
        std::atomic<std::size_t> next{ 0 };
        vector<string> errors(inputs.size());
        auto worker = [&] {
            for (std::size_t i ; (i = next++) < inputs.size() ; ) {
                try {
                    reports[i] = run_conjecture_check(inputs[i].first, inputs[i].second, opts);
                }
                catch (const InputError & e) {
                    errors[i] = e.what();
                }
            }
        };
        vector<std::thread> pool;
        for (int t = 1 ; t < globals.threads ; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();
        for (auto & e : errors)
            if (! e.empty())
                throw InputError(e);

        if (csv)
            std::cout << report_csv_header() << "\n";
        for (auto & r : reports) {
            if (csv)
                std::cout << report_csv_row(r) << "\n";
            else if (globals.json)
                std::cout << report_json(r) << "\n";
            else {
                std::cout << r.id << " " << r.provenance.generator << "(" << r.provenance.params << ") n=" << r.n
                          << " warmth " << (r.warmth ? r.warmth->to_string() : "error") << " chi "
                          << (r.chromatic.infinite ? string("inf") : std::to_string(r.chromatic.hi)) << " hconn "
                          << (r.connectivity ? (r.connectivity->infinite ? string("inf") : std::to_string(r.connectivity->value))
                                             : string("?"));
                for (auto & [name, v] : r.verdicts())
                    std::cout << " " << name << "=" << to_string(v);
                std::cout << "\n";
            }
            for (auto & note : r.notes)
                if (note.find("VIOLATION") != string::npos || note.find("bug") != string::npos)
                    std::cerr << "!!! " << r.id << ": " << note << "\n" << report_json(r, 2) << "\n";
        }
        return verdict_exit(reports);
    }

    struct SweepArgs
    {
        string model = "gnp";
        vector<int> sizes{ 8, 12, 16 };
        double p = 0.5;
        double alpha = 0;
        double average_degree = 4.0;
        double beta = 2.5;
        int trials = 30;
        bool aggregate = false;
        string output;
    };

    auto run_sweep(const Globals & globals, const SweepArgs & args) -> int
    {
        SweepSpec spec;
        spec.model = parse_random_model(args.model);
        spec.sizes = args.sizes;
        spec.p = args.p;
        if (args.alpha > 0)
            spec.alpha = args.alpha;
        spec.average_degree = args.average_degree;
        spec.beta = args.beta;
        spec.trials = args.trials;
        spec.seed = globals.seed;
        spec.threads = globals.threads;
        spec.report = report_options(globals);
        auto sweep = run_random_sweep(spec);
        string text = globals.json ? sweep_json(sweep, 2) + "\n" : (args.aggregate ? sweep_aggregate_csv(sweep) : sweep_csv(sweep));
        if (args.output.empty())
            std::cout << text;
        else {
            std::ofstream out(args.output);
            if (! out)
                throw InputError("cannot write " + args.output);
            out << text;
            if (! globals.json)
                std::cout << sweep_aggregate_csv(sweep);
        }
        vector<InvariantReport> reports;
        for (auto & t : sweep.trials)
            if (t.report.warmth)
                reports.push_back(t.report);
        return verdict_exit(reports) == criterion_failure ? criterion_failure : ok;
    }

    auto run_suite(const Globals & globals) -> int
    {
        auto rows = run_paper_suite([&] (const SuiteRow & r) {
            if (! globals.json) {
                std::printf("%-4s %2d  %-18s %-55s %7.1fs / %4.0fs  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                        r.location.c_str(), r.title.c_str(), r.seconds, r.budget_seconds, r.detail.c_str());
                std::fflush(stdout);
            }
        });
        if (globals.json)
            std::cout << suite_json(rows, 2) << "\n";
        for (auto & r : rows)
            if (! r.passed)
                return criterion_failure;
        return ok;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{ "warmthkit: graph warmth, hom(K2,G) homology and the bounds that tie them to colouring" };
    app.footer(family_help);
    app.require_subcommand(1);

    Globals globals;
    app.add_flag("--json", globals.json, "Emit JSON");
    app.add_option("--seed", globals.seed, "Seed for random graphs and sweeps");
    app.add_option("--budget-ms", globals.budget_ms, "Time budget per search in milliseconds (0: none)")->check(CLI::NonNegativeNumber);
    app.add_option("--threads", globals.threads, "Worker threads for conjecture and sweep")->check(CLI::PositiveNumber);
    app.fallthrough();

    string source;
    auto graph_arg = [&] (CLI::App * sub) { sub->add_option("graph", source, "Graph file or family spec")->required(); };

    auto gen = app.add_subcommand("gen", "Generate a graph and write it out");
    graph_arg(gen);
    string format = "edge-list", output;
    gen->add_option("--format", format, "edge-list or dimacs");
    gen->add_option("-o,--output", output, "Output file");

    auto fold = app.add_subcommand("fold", "Fold down to the stiff residue");
    graph_arg(fold);

    auto warm = app.add_subcommand("warmth", "Warmth via d-stable families");
    graph_arg(warm);
    WarmthArgs wargs;
    warm->add_option("--mode", wargs.mode, "exact or heuristic")->check(CLI::IsMember({ "exact", "heuristic" }));
    warm->add_option("--max-d", wargs.max_d, "Largest d to try");
    warm->add_flag("--no-fold", wargs.no_fold, "Skip the fold preprocessing");
    warm->add_option("--exact-cap", wargs.exact_cap, "Vertex cap for exact mode (at most 26)");

    auto hom = app.add_subcommand("homology", "Integer homology of hom(K2,G)");
    graph_arg(hom);
    int max_dim = -1;
    bool f_vector = false, hom_no_fold = false;
    hom->add_option("--max-dim", max_dim, "Highest homology dimension (default min(top, 6))");
    hom->add_flag("--f-vector", f_vector, "Also print cell counts");
    hom->add_flag("--no-fold", hom_no_fold, "Skip the fold preprocessing");

    auto chrom = app.add_subcommand("chromatic", "Exact chromatic number within --budget-ms");
    graph_arg(chrom);

    auto conj = app.add_subcommand("conjecture", "Full invariant report and bound checks");
    vector<string> sources;
    bool corpus = false, csv = false;
    conj->add_option("graphs", sources, "Graph files or family specs");
    conj->add_flag("--corpus", corpus, "Run over the built-in 200-graph corpus");
    conj->add_flag("--csv", csv, "CSV rows instead of text");

    auto sweep = app.add_subcommand("sweep", "Seeded random-graph sweep");
    SweepArgs sargs;
    sweep->add_option("--model", sargs.model, "gnp or chung-lu");
    sweep->add_option("--sizes", sargs.sizes, "Vertex counts")->delimiter(',');
    sweep->add_option("--p", sargs.p, "Edge probability for gnp");
    sweep->add_option("--alpha", sargs.alpha, "Use p = n^-alpha instead of --p");
    sweep->add_option("--avg-degree", sargs.average_degree, "Chung-Lu average degree");
    sweep->add_option("--beta", sargs.beta, "Chung-Lu power-law exponent");
    sweep->add_option("--trials", sargs.trials, "Trials per size");
    sweep->add_flag("--aggregate", sargs.aggregate, "Print only the per-size aggregate table");
    sweep->add_option("-o,--output", sargs.output, "Write the full output to a file");

    auto suite = app.add_subcommand("paper-suite", "Run every acceptance criterion");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }

    try {
        if (*gen)
            return run_gen(globals, source, format, output);
        if (*fold)
            return run_fold(globals, source);
        if (*warm)
            return run_warmth(globals, source, wargs);
        if (*hom)
            return run_homology(globals, source, max_dim, f_vector, hom_no_fold);
        if (*chrom)
            return run_chromatic(globals, source);
        if (*conj)
            return run_conjecture(globals, sources, corpus, csv);
        if (*sweep)
            return run_sweep(globals, sargs);
        if (*suite)
            return run_suite(globals);
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    catch (const RangeError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    catch (const CapacityError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
    return ok;
}
