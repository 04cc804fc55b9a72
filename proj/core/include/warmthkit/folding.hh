#ifndef WARMTHKIT_FOLDING_HH
#define WARMTHKIT_FOLDING_HH

#include <warmthkit/graph.hh>

#include <optional>
#include <vector>

namespace warmthkit
{
    struct Fold
    {
        int removed;
        int absorber;

        auto operator==(const Fold &) const -> bool = default;
    };

    /// Folds in the order applied, with vertices named by their index in the original graph.
    struct FoldSequence
    {
        std::vector<Fold> steps;
    };

    /// Lowest removed vertex v, then lowest absorber w != v, with N(v) a subset of N(w).
    auto find_fold(const Graph & g) -> std::optional<Fold>;

    auto is_stiff(const Graph & g) -> bool;

    struct StiffReduction
    {
        Graph graph;
        FoldSequence folds;
        /// original[i] is the original index of residue vertex i.
        std::vector<int> original;
    };

    /// Applies find_fold until none remains. Labels of the input carry over to the residue.
    auto stiff_reduction(const Graph & g) -> StiffReduction;

    /// True iff the stiff residue is a single looped vertex.
    auto is_dismantlable(const Graph & g) -> bool;

    /// Checks that every step of a fold sequence is a legal fold of the shrinking graph.
    auto valid_fold_sequence(const Graph & g, const FoldSequence & folds) -> bool;
}

#endif
