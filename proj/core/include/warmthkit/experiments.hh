#ifndef WARMTHKIT_EXPERIMENTS_HH
#define WARMTHKIT_EXPERIMENTS_HH

#include <warmthkit/chromatic.hh>
#include <warmthkit/graph.hh>
#include <warmthkit/homology.hh>
#include <warmthkit/warmth.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace warmthkit
{
    inline constexpr const char * report_schema = "warmthkit-report/1";
    inline constexpr const char * sweep_schema = "warmthkit-sweep/1";

    /// Outcome of checking one implication on one graph.
    enum class Verdict { consistent, consistent_with_caveat, violated, inconclusive, not_applicable };

    auto to_string(Verdict v) -> std::string;

    struct Provenance
    {
        std::string generator;
        std::string params;
        std::optional<std::uint64_t> seed;
    };

    struct ReportOptions
    {
        /// Exact warmth unless the stiff residue is above the exact cap, then heuristic.
        WarmthOptions warmth;
        bool heuristic_fallback = true;
        int homology_dim = default_homology_dim;
        std::chrono::milliseconds chromatic_budget{ 10000 };
        /// Complete bipartite sizes checked against warmth <= a + b - 1.
        std::vector<std::pair<int, int>> bipartite_sizes{ { 2, 2 }, { 2, 3 }, { 3, 3 } };
    };

    struct BipartiteCheck
    {
        int a = 0;
        int b = 0;
        bool contains = false;
        Verdict verdict = Verdict::not_applicable;
    };

    struct InvariantReport
    {
        std::string id;
        Provenance provenance;
        int n = 0;
        int edges = 0;
        int loops = 0;

        std::optional<WarmthResult> warmth;
        std::string warmth_error;
        std::optional<HomologySummary> homology;
        std::optional<Connectivity> connectivity;
        std::string homology_error;
        ChromaticResult chromatic;

        /// warmth <= hconn + 3; free H1 forces warmth <= 3; no K_{a,b} forces warmth <= a + b - 1 (loop-free only);
        /// warmth <= chi; hconn + 3 <= chi.
        Verdict warmth_vs_hconn = Verdict::inconclusive;
        Verdict free_h1 = Verdict::not_applicable;
        Verdict kab_free = Verdict::not_applicable;
        Verdict warmth_vs_chi = Verdict::inconclusive;
        Verdict hconn_vs_chi = Verdict::inconclusive;
        std::vector<BipartiteCheck> bipartite;
        std::vector<std::string> notes;

        auto verdicts() const -> std::vector<std::pair<std::string, Verdict>>;
        auto any_violation() const -> bool;
        auto any_inconclusive() const -> bool;
    };

    /// Throws InputError for an edgeless graph; budget trouble only ever shows up as inconclusive fields.
    auto run_conjecture_check(const Graph & g, const Provenance & provenance, const ReportOptions & options = {})
            -> InvariantReport;

    auto report_json(const InvariantReport & report, int indent = -1) -> std::string;
    auto report_csv_header() -> std::string;
    auto report_csv_row(const InvariantReport & report) -> std::string;

    struct CorpusEntry
    {
        std::string name;
        Graph graph;
        Provenance provenance;
    };

    /// The fixed test corpus: every named family at small size plus seeded random graphs; 200 graphs, all with an edge.
    auto build_corpus(std::uint64_t seed = 2024) -> std::vector<CorpusEntry>;

    enum class RandomModel { gnp, chung_lu };

    auto parse_random_model(const std::string & name) -> RandomModel;
    auto to_string(RandomModel model) -> std::string;

    struct SweepSpec
    {
        RandomModel model = RandomModel::gnp;
        std::vector<int> sizes{ 8, 12, 16 };
        /// Edge probability for gnp; ignored when alpha is set.
        double p = 0.5;
        /// When set, p = n^{-alpha}.
        std::optional<double> alpha;
        /// Chung-Lu: expected average degree and power-law exponent of the weights.
        double average_degree = 4.0;
        double beta = 2.5;
        int trials = 30;
        std::uint64_t seed = 1;
        int threads = 1;
        ReportOptions report;
    };

    struct SweepTrial
    {
        int n = 0;
        int trial = 0;
        std::uint64_t seed = 0;
        InvariantReport report;
    };

    struct SweepAggregate
    {
        int n = 0;
        int trials = 0;
        /// Trials whose warmth (resp. connectivity) was exact and finite.
        int warmth_count = 0;
        double warmth_mean = 0;
        int warmth_min = 0;
        int warmth_max = 0;
        int hconn_count = 0;
        double hconn_mean = 0;
        int hconn_min = 0;
        int hconn_max = 0;
    };

    struct SweepReport
    {
        SweepSpec spec;
        std::vector<SweepTrial> trials;
        std::vector<SweepAggregate> aggregates;
    };

    /// Per-trial seeds are derived from spec.seed, n and the trial index, so output is independent of threads.
    auto run_random_sweep(const SweepSpec & spec) -> SweepReport;

    auto trial_seed(std::uint64_t seed, int n, int trial) -> std::uint64_t;
    auto sweep_graph(const SweepSpec & spec, int n, std::uint64_t seed) -> Graph;

    auto sweep_csv(const SweepReport & sweep) -> std::string;
    auto sweep_aggregate_csv(const SweepReport & sweep) -> std::string;
    auto sweep_json(const SweepReport & sweep, int indent = -1) -> std::string;

    struct SuiteRow
    {
        int id = 0;
        std::string location;
        std::string title;
        bool passed = false;
        std::string detail;
        double seconds = 0;
        double budget_seconds = 0;
    };

    /// Runs every acceptance criterion; progress receives each row as it finishes.
    auto run_paper_suite(const std::function<void(const SuiteRow &)> & progress = { }) -> std::vector<SuiteRow>;

    auto suite_json(const std::vector<SuiteRow> & rows, int indent = -1) -> std::string;
}

#endif
