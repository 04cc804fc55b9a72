#ifndef WARMTHKIT_CHAINS_HH
#define WARMTHKIT_CHAINS_HH

#include <warmthkit/generators.hh>
#include <warmthkit/graph.hh>
#include <warmthkit/hom_complex.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace warmthkit
{
    /**
     * Closed walk a_0 b_1 a_1 b_2 ... a_{n-1} b_n of even length 2n; the walk
     * returns from b_n to a_0. vertices[2i] = a_i and vertices[2i - 1] = b_i,
     * so b_0 means b_n.
     */
    struct EvenClosedWalk
    {
        std::vector<int> vertices;

        auto length() const -> int { return static_cast<int>(vertices.size()); }
        auto half_length() const -> int { return length() / 2; }
        auto a(int i) const -> int;
        auto b(int i) const -> int;

        /// The same closed walk traversed r times.
        auto repeated(int r) const -> EvenClosedWalk;
    };

    /// Throws InputError unless the walk is closed, of even positive length, and follows edges of g.
    auto validate_walk(const Graph & g, const EvenClosedWalk & walk) -> void;

    /// Integer coefficients on the 1-cells, indexed like CellComplex::cells(1).
    struct Chain1
    {
        std::vector<std::int64_t> coeffs;

        auto operator==(const Chain1 &) const -> bool = default;
    };

    /// Recovers G from the 0-cells (directed edges) of hom(K2, G).
    auto underlying_graph(const CellComplex & c) -> Graph;

    /**
     * c(gamma) = sum {a_i} x {b_i, b_{i+1}} + sum {a_{i-1}, a_i} x {b_i},
     * each product cell oriented from the first listed vertex to the second.
     * Degenerate terms (a repeated vertex) contribute nothing. Throws
     * StructuralError if the result is not a cycle.
     */
    auto cycle_chain(const CellComplex & c, const EvenClosedWalk & walk) -> Chain1;

    /// Boundary as a 0-chain, indexed like CellComplex::cells(0).
    auto chain_boundary(const CellComplex & c, const Chain1 & chain) -> std::vector<std::int64_t>;

    /**
     * Coordinates on H_1 tensor a prime field (p = 2^61 - 1): a basis of
     * cocycles modulo coboundaries, one functional per free generator. Two
     * cycles have the same rational class exactly when their coordinates
     * agree, barring a prime dividing the relevant minors.
     */
    class H1Coordinates
    {
    private:
        // _columns[e] holds the coordinates of the 1-cell e
        std::vector<std::vector<std::uint64_t>> _columns;
        std::size_t _rank = 0;

    public:
        explicit H1Coordinates(const CellComplex & c);

        auto rank() const -> std::size_t { return _rank; }
        auto of_cell(int index) const -> const std::vector<std::uint64_t> & { return _columns[index]; }
        auto of_chain(const Chain1 & chain) const -> std::vector<std::uint64_t>;
    };

    /// Signed 1-cell for one step of a walk: centre vertex with its two walk neighbours.
    struct WalkStep
    {
        int cell = -1;
        int sign = 0;
    };

    /// at_a: the centre sits at an even position, giving the cell {centre} x {before, after}.
    auto walk_step_cell(const CellComplex & c, int before, int centre, int after, bool at_a) -> WalkStep;

    struct SpanReport
    {
        long long free_rank = 0;
        long long span_rank = 0;
        bool spanned = false;
        bool truncated = false;
        int walk_length_cap = 0;
        long long states = 0;
    };

    /// Cap on search states for walk enumeration.
    inline constexpr long long max_walk_states = 4'000'000;

    /**
     * Rank of the span of the classes [c(gamma)] over all even closed walks of
     * length at most walk_length_cap, compared with b_1. The complex must be
     * built through dimension 2 (or be complete).
     */
    auto h1_span_check(const CellComplex & c, int walk_length_cap) -> SpanReport;

    /// A random closed walk of even length at most max_length, or nullopt after a bounded number of tries.
    auto random_even_closed_walk(const Graph & g, Rng & rng, int max_length) -> std::optional<EvenClosedWalk>;
}

#endif
