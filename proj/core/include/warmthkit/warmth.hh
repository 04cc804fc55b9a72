#ifndef WARMTHKIT_WARMTH_HH
#define WARMTHKIT_WARMTH_HH

#include <warmthkit/chains.hh>
#include <warmthkit/generators.hh>
#include <warmthkit/graph.hh>
#include <warmthkit/vertex_set.hh>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace warmthkit
{
    /**
     * A d-stable family: every member is a nonempty proper vertex subset and
     * equals the intersection of N(B) over its d witnesses. Witnesses are
     * indices into members and may repeat.
     */
    struct StableFamily
    {
        int d = 0;
        std::vector<VertexSet> members;
        std::vector<std::vector<int>> witnesses;

        auto size() const -> std::size_t { return members.size(); }
        auto index_of(const VertexSet & a) const -> std::optional<int>;
        auto contains(const VertexSet & a) const -> bool { return index_of(a).has_value(); }

        /// The members reachable from root through witness lists, reindexed; still d-stable.
        auto witness_closure(int root) const -> StableFamily;
    };

    /// Empty string when the family satisfies every invariant in g, otherwise the first problem found.
    auto stable_family_defect(const Graph & g, const StableFamily & family) -> std::string;
    auto verify_stable_family(const Graph & g, const StableFamily & family) -> bool;

    enum class WarmthMode { exact, heuristic };

    auto to_string(WarmthMode mode) -> std::string;

    /// Exact search enumerates every subset, so it is limited to this many vertices by default.
    inline constexpr int default_exact_cap = 20;
    inline constexpr int exact_hard_cap = 26;
    inline constexpr std::size_t default_heuristic_limit = 4096;

    struct StableSearchOptions
    {
        WarmthMode mode = WarmthMode::exact;
        int exact_cap = default_exact_cap;
        std::size_t heuristic_limit = default_heuristic_limit;
        /// Extra candidate sets for the heuristic universe.
        std::vector<VertexSet> seeds;
        /// Zero means no deadline.
        std::chrono::milliseconds budget{ 0 };
    };

    /// Raised internally when a search deadline passes; warmth() turns it into an interval.
    struct BudgetExceeded : std::runtime_error
    {
        BudgetExceeded() : std::runtime_error("time budget exhausted") { }
    };

    /**
     * Greatest fixed point of the pruning that deletes every candidate not
     * expressible as an intersection of d neighborhoods of surviving
     * candidates. Exact mode uses all nonempty proper subsets; heuristic mode
     * uses singletons and vertex neighborhoods closed under N and pairwise
     * intersection (bounded by heuristic_limit), plus seeds.
     */
    auto d_stable_family_exists(const Graph & g, int d, const StableSearchOptions & options = {})
            -> std::optional<StableFamily>;

    /// The same pruning over an explicit candidate list.
    auto greatest_stable_subfamily(const Graph & g, int d, std::vector<VertexSet> candidates,
            std::chrono::milliseconds budget = std::chrono::milliseconds{ 0 }) -> std::optional<StableFamily>;

    /// Fewest distinct family members whose neighborhoods intersect to exactly a.
    auto minimal_witness_size(const Graph & g, const std::vector<VertexSet> & family, const VertexSet & a)
            -> std::optional<int>;

    struct WarmthOptions
    {
        WarmthMode mode = WarmthMode::exact;
        /// Largest d tried; default chi - 1 (n - 1 when chi is infinite).
        std::optional<int> d_cap;
        bool fold = true;
        int exact_cap = default_exact_cap;
        std::size_t heuristic_limit = default_heuristic_limit;
        std::vector<VertexSet> seeds;
        std::chrono::milliseconds budget{ 0 };
        std::chrono::milliseconds chromatic_budget{ 10000 };
    };

    /**
     * zeta(G) as lo..hi. infinite is set for dismantlable graphs and when an
     * exact search rules out every d. hi is empty when no finite upper bound
     * is known. The certificate, when present, is a (hi - 1)-stable family in
     * the subgraph induced on certificate_vertices, which folding leaves with
     * the same warmth as the input.
     */
    struct WarmthResult
    {
        int lo = 2;
        std::optional<int> hi;
        bool infinite = false;
        WarmthMode mode = WarmthMode::exact;
        std::string method;
        std::optional<StableFamily> certificate;
        /// Input indices of the vertices of the graph the certificate lives on (the stiff residue when folding).
        std::vector<int> certificate_vertices;
        /// Set when the search stopped at the time budget.
        bool budget_exhausted = false;

        auto exact() const -> bool { return infinite || (hi && *hi == lo); }
        auto value() const -> std::optional<int> { return (exact() && ! infinite) ? hi : std::nullopt; }
        auto to_string() const -> std::string;
    };

    auto warmth(const Graph & g, const WarmthOptions & options = {}) -> WarmthResult;

    /// Family {{a_0}, ..., {a_{g-1}}} along a shortest cycle; 2-stable when the girth is at least 5.
    auto girth_family(const Graph & g) -> std::optional<StableFamily>;

    /// A set U with |U| <= k and the intersection of N(u) over U equal to {v}; a smallest one.
    auto generated_by_at_most(const Graph & g, int v, int k) -> std::optional<VertexSet>;

    /// Disjoint A, B with |A| = a, |B| = b and every pair across them an edge.
    auto find_complete_bipartite(const Graph & g, int a, int b) -> std::optional<std::pair<VertexSet, VertexSet>>;

    /// Smallest graph distance from a vertex to its image; nullopt when no vertex can reach its image.
    auto action_displacement(const Graph & g, const Z2Action & action) -> std::optional<int>;

    /**
     * From a d-stable family of singletons and a 5-discontinuous involution,
     * the family of orbits {x, gamma x}, which is d-stable and invariant.
     * Throws InputError when the hypotheses fail.
     */
    auto orbit_family(const Graph & g, const StableFamily & singletons, const Z2Action & action) -> StableFamily;

    /**
     * Lifts an invariant d-stable family on one factor of a twisted product
     * to the family {[g, h] : h in A} (family on the right factor) or
     * {[g, h] : g in A} (left factor) on the product.
     */
    enum class Factor { left, right };
    auto lift_family(const TwistedProduct & product, const StableFamily & family,
            const Z2Action & action, Factor factor) -> StableFamily;

    /// Singletons {i} with witnesses {i-1}, {i+1} on a cycle (looped or not) of length at least 5.
    auto cycle_singleton_family(const Graph & cycle_graph) -> StableFamily;

    /// 2-stable certificate on T_{k,m} (recursive numbering) for m >= 5, via orbits and lifting.
    auto twisted_toroidal_certificate(int k, int m) -> std::pair<TwistedProduct, StableFamily>;

    struct TwoStableSearch
    {
        enum class Status { found, inconclusive };

        Status status = Status::inconclusive;
        std::optional<StableFamily> family;
        /// A_i and B_i as closed under forcing, i = 0..n-1.
        std::vector<VertexSet> a_sets;
        std::vector<VertexSet> b_sets;
        long long states = 0;
        bool truncated = false;
        std::string reason;
    };

    /// Default walk_cap is 6 times the length of gamma.
    auto two_stable_witness_search(const Graph & g, const EvenClosedWalk & gamma, std::optional<int> walk_cap = std::nullopt)
            -> TwoStableSearch;
}

#endif
