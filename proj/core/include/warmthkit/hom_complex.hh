#ifndef WARMTHKIT_HOM_COMPLEX_HH
#define WARMTHKIT_HOM_COMPLEX_HH

#include <warmthkit/graph.hh>
#include <warmthkit/sparse_matrix.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace warmthkit
{
    /// The product cell sigma x tau of hom(K2, G); vertex sets as single-word masks.
    struct Cell
    {
        std::uint64_t sigma = 0;
        std::uint64_t tau = 0;

        auto dim() const -> int;

        auto operator==(const Cell &) const -> bool = default;
        auto operator<=>(const Cell &) const = default;
    };

    enum class BoundaryConvention
    {
        standard,
        /// Drops the (-1)^(|sigma|-1) factor on the tau part. Only for negative-control tests.
        unsigned_cross_term
    };

    /**
     * hom(K2, G) up to some dimension. Cells of each dimension are sorted, so
     * a cell's index is its rank within its dimension. The 0-cells are the
     * directed edges (v, w) of G.
     */
    class CellComplex
    {
    private:
        int _n = 0;
        int _top_dim = -1;
        std::vector<std::vector<Cell>> _cells;

    public:
        CellComplex() = default;
        CellComplex(int n, int top_dim, std::vector<std::vector<Cell>> cells);

        auto vertex_count() const -> int { return _n; }

        /// Top dimension of the full complex, whether or not it was built.
        auto top_dim() const -> int { return _top_dim; }
        /// Highest dimension whose cells are present.
        auto built_dim() const -> int { return static_cast<int>(_cells.size()) - 1; }
        auto complete() const -> bool { return built_dim() >= _top_dim; }

        auto cells(int k) const -> const std::vector<Cell> &;
        auto cell_count(int k) const -> long long;
        auto f_vector() const -> std::vector<long long>;

        auto index_of(const Cell & c) const -> std::optional<int>;

        /// Columns are k-cells, rows are (k-1)-cells; k >= 1 and k <= built_dim().
        auto boundary(int k, BoundaryConvention convention = BoundaryConvention::standard) const -> SparseMatrix;

        /// Every face of every cell is present; throws StructuralError otherwise.
        auto check_closed() const -> void;
    };

    /// Cap on the number of cells build_hom_k2 will produce.
    inline constexpr long long max_cells = 4'000'000;

    /**
     * Cells up to max_dim (default: everything). Enumeration walks the sets
     * sigma with a nonempty common neighbourhood C(sigma) and emits every
     * nonempty tau inside C(sigma).
     */
    auto build_hom_k2(const Graph & g, std::optional<int> max_dim = std::nullopt) -> CellComplex;

    /// Exact check that boundary(k-1) * boundary(k) vanishes for every built k.
    auto boundary_squares_vanish(const CellComplex & c,
            BoundaryConvention convention = BoundaryConvention::standard) -> bool;

    /// Number of connected components of the 1-skeleton, via union-find on 0- and 1-cells.
    auto skeleton_components(const CellComplex & c) -> int;
}

#endif
