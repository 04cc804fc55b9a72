#ifndef WARMTHKIT_CHROMATIC_HH
#define WARMTHKIT_CHROMATIC_HH

#include <warmthkit/graph.hh>

#include <chrono>
#include <vector>

namespace warmthkit
{
    struct Coloring
    {
        std::vector<int> colors;
        int k = 0;

        /// Proper for g: no edge monochromatic, no loops, colors in 0..k-1.
        auto proper_for(const Graph & g) const -> bool;
    };

    /**
     * chi(G) as an interval. A graph with a loop has no proper colouring and
     * comes back with infinite set; otherwise exact is set when the search
     * closed the gap between the clique bound and the best colouring found.
     */
    struct ChromaticResult
    {
        bool infinite = false;
        bool exact = false;
        int lo = 0;
        int hi = 0;
        Coloring witness;
        long long nodes = 0;
    };

    auto chromatic_number(const Graph & g,
            std::chrono::milliseconds budget = std::chrono::milliseconds{ 10000 }) -> ChromaticResult;

    /// Greedy clique, used as the lower bound.
    auto greedy_clique(const Graph & g) -> std::vector<int>;
}

#endif
