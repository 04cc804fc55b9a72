#ifndef WARMTHKIT_HOMOLOGY_HH
#define WARMTHKIT_HOMOLOGY_HH

#include <warmthkit/hom_complex.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace warmthkit
{
    /**
     * Integer homology H_0..H_D of a cell complex. betti[k] is the free rank
     * and torsion[k] the invariant factors above 1. When the complex was
     * built only partially, D is one below the highest built dimension and
     * truncated is set.
     */
    struct HomologySummary
    {
        std::vector<long long> betti;
        std::vector<std::vector<std::int64_t>> torsion;
        std::vector<long long> f_vector;
        int top_dim = -1;
        bool truncated = false;

        auto computed_dim() const -> int { return static_cast<int>(betti.size()) - 1; }

        /// H_k vanishes in reduced homology.
        auto reduced_zero(int k) const -> bool;

        auto operator==(const HomologySummary &) const -> bool = default;
    };

    /// Default max_dim is min(top dimension, 6).
    inline constexpr int default_homology_dim = 6;

    auto homology(const CellComplex & c, std::optional<int> max_dim = std::nullopt) -> HomologySummary;

    /// Builds hom(K2, G) with just enough cells and returns its homology through max_dim.
    auto hom_homology(const Graph & g, std::optional<int> max_dim = std::nullopt) -> HomologySummary;

    /**
     * Homological stand-in for conn(hom(K2, G)). caveat is set whenever the
     * value is at least 1, since simple connectivity is never checked; then
     * the value only bounds the true connectivity from above. infinite means
     * every reduced group of the full complex vanishes; truncated means the
     * value is only what the computed range could show.
     */
    struct Connectivity
    {
        int value = -1;
        bool infinite = false;
        bool truncated = false;
        bool caveat = false;
    };

    auto homological_connectivity(const HomologySummary & h) -> Connectivity;

    /**
     * Computes connectivity by growing the computed range one dimension at a
     * time, stopping at the first nonvanishing reduced group.
     */
    auto hom_connectivity(const Graph & g, int max_dim = default_homology_dim) -> Connectivity;

    /// b_1: positive exactly when H_1 has an infinite cyclic subgroup.
    auto h1_free_rank(const HomologySummary & h) -> long long;

    /// Alternating f-vector sum against alternating Betti sum; nullopt when the summary is truncated.
    auto euler_characteristic_matches(const HomologySummary & h) -> std::optional<bool>;
}

#endif
