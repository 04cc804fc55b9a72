#ifndef WARMTHKIT_SPARSE_MATRIX_HH
#define WARMTHKIT_SPARSE_MATRIX_HH

#include <cstdint>
#include <utility>
#include <vector>

namespace warmthkit
{
    /// Column-major sparse integer matrix; each column sorted by row, no explicit zeros.
    struct SparseMatrix
    {
        using Entry = std::pair<int, std::int64_t>;

        int rows = 0;
        int cols = 0;
        std::vector<std::vector<Entry>> columns;

        SparseMatrix() = default;
        SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) { }

        auto nonzeros() const -> long long;
        auto is_zero() const -> bool { return nonzeros() == 0; }

        /// Product this * rhs, exact in 64 bits; throws std::overflow_error on overflow.
        auto multiply(const SparseMatrix & rhs) const -> SparseMatrix;
    };

    /**
     * Rank and invariant factors of an integer matrix. Sparse elimination on
     * +-1 pivots first (lowest Markowitz cost), then a dense Smith normal form
     * in arbitrary precision for whatever is left. torsion lists the invariant
     * factors greater than 1 in divisibility order.
     */
    struct SmithSummary
    {
        int rank = 0;
        std::vector<std::int64_t> torsion;
        /// Size of the leftover block that needed the dense pass.
        int dense_rows = 0;
        int dense_cols = 0;
    };

    auto smith_summary(const SparseMatrix & m) -> SmithSummary;

    /// Prime field arithmetic modulo 2^61 - 1, for rank and span computations.
    namespace modp
    {
        inline constexpr std::uint64_t prime = (std::uint64_t{ 1 } << 61) - 1;

        auto reduce(std::int64_t x) -> std::uint64_t;
        auto add(std::uint64_t a, std::uint64_t b) -> std::uint64_t;
        auto sub(std::uint64_t a, std::uint64_t b) -> std::uint64_t;
        auto mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t;
        auto inverse(std::uint64_t a) -> std::uint64_t;

        /// Row-reduced basis builder: insert vectors one at a time, learn whether each was independent.
        class Basis
        {
        private:
            std::size_t _dim;
            std::vector<std::vector<std::uint64_t>> _rows;
            std::vector<std::size_t> _pivots;

        public:
            explicit Basis(std::size_t dim) : _dim(dim) { }

            /// Reduces v against the basis; returns true (and keeps it) if independent.
            auto insert(std::vector<std::uint64_t> v) -> bool;
            auto rank() const -> std::size_t { return _rows.size(); }
            auto dim() const -> std::size_t { return _dim; }
        };

        /// Basis of the left null space {f : f^T M = 0} of a sparse matrix, over the prime field.
        auto left_null_space(const SparseMatrix & m) -> std::vector<std::vector<std::uint64_t>>;
    }
}

#endif
