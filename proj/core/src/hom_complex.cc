#include <warmthkit/hom_complex.hh>
#include <warmthkit/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using namespace warmthkit;

using std::optional;
using std::uint64_t;
using std::vector;

auto Cell::dim() const -> int
{
    return std::popcount(sigma) + std::popcount(tau) - 2;
}

CellComplex::CellComplex(int n, int top_dim, vector<vector<Cell>> cells) :
    _n(n),
    _top_dim(top_dim),
    _cells(std::move(cells))
{
}

auto CellComplex::cells(int k) const -> const vector<Cell> &
{
    static const vector<Cell> none;
    return (k >= 0 && k < static_cast<int>(_cells.size())) ? _cells[k] : none;
}

auto CellComplex::cell_count(int k) const -> long long
{
    return static_cast<long long>(cells(k).size());
}

auto CellComplex::f_vector() const -> vector<long long>
{
    vector<long long> result;
    for (auto & level : _cells)
        result.push_back(static_cast<long long>(level.size()));
    return result;
}

auto CellComplex::index_of(const Cell & c) const -> optional<int>
{
    auto & level = cells(c.dim());
    auto it = std::lower_bound(level.begin(), level.end(), c);
    if (it == level.end() || *it != c)
        return std::nullopt;
    return static_cast<int>(it - level.begin());
}

namespace
{
    // Faces of a cell with their incidence signs, in the fixed orientation convention.
    template <typename F>
    auto for_each_face(const Cell & cell, BoundaryConvention convention, F && f) -> void
    {
        int sigma_size = std::popcount(cell.sigma);
        int tau_size = std::popcount(cell.tau);
        if (sigma_size >= 2) {
            int position = 0;
            for (auto bits = cell.sigma ; bits ; bits &= bits - 1, ++position) {
                auto v = bits & -bits;
                f(Cell{ cell.sigma & ~v, cell.tau }, (position % 2 == 0) ? 1 : -1);
            }
        }
        if (tau_size >= 2) {
            int cross = (convention == BoundaryConvention::standard && (sigma_size - 1) % 2 == 1) ? -1 : 1;
            int position = 0;
            for (auto bits = cell.tau ; bits ; bits &= bits - 1, ++position) {
                auto w = bits & -bits;
                f(Cell{ cell.sigma, cell.tau & ~w }, cross * ((position % 2 == 0) ? 1 : -1));
            }
        }
    }

    class CellBuilder
    {
    private:
        vector<uint64_t> _nb;
        optional<int> _max_dim;

        auto emit_taus(uint64_t sigma, uint64_t available, uint64_t chosen, int room) -> void
        {
            // every nonempty tau within available, at most room extra members beyond chosen
            while (available) {
                auto bit = available & -available;
                available &= available - 1;
                auto tau = chosen | bit;
                Cell cell{ sigma, tau };
                int d = cell.dim();
                if (static_cast<int>(cells.size()) <= d)
                    cells.resize(d + 1);
                cells[d].push_back(cell);
                if (++total > max_cells)
                    throw CapacityError("hom(K2, G) has more than " + std::to_string(max_cells) + " cells in range");
                if (room > 1)
                    emit_taus(sigma, available, tau, room - 1);
            }
        }

    public:
        vector<vector<Cell>> cells;
        int top = -1;
        long long total = 0;

        CellBuilder(vector<uint64_t> nb, optional<int> max_dim) :
            _nb(std::move(nb)),
            _max_dim(max_dim)
        {
        }

        auto extend(uint64_t sigma, uint64_t common, int next) -> void
        {
            int sigma_size = std::popcount(sigma);
            top = std::max(top, sigma_size + std::popcount(common) - 2);
            int room = _max_dim ? *_max_dim + 2 - sigma_size : 64;
            if (room >= 1)
                emit_taus(sigma, common, 0, room);
            for (int v = next ; v < static_cast<int>(_nb.size()) ; ++v) {
                auto narrowed = common & _nb[v];
                if (narrowed)
                    extend(sigma | (uint64_t{ 1 } << v), narrowed, v + 1);
            }
        }
    };
}

auto warmthkit::build_hom_k2(const Graph & g, optional<int> max_dim) -> CellComplex
{
    if (g.size() > word_vertices)
        throw CapacityError("hom(K2, G) needs at most 64 vertices");
    if (g.edge_count() == 0)
        throw InputError("hom(K2, G) of an edgeless graph is empty");
    if (max_dim && *max_dim < 0)
        throw InputError("max_dim must be nonnegative");

    auto nb = g.neighborhood_masks();
    CellBuilder builder(nb, max_dim);
    for (int v = 0 ; v < g.size() ; ++v)
        if (nb[v])
            builder.extend(uint64_t{ 1 } << v, nb[v], v + 1);

    auto cells = std::move(builder.cells);
    int keep = max_dim ? std::min(*max_dim, builder.top) : builder.top;
    cells.resize(keep + 1);
    for (auto & level : cells)
        std::sort(level.begin(), level.end());
    return CellComplex(g.size(), builder.top, std::move(cells));
}

auto CellComplex::boundary(int k, BoundaryConvention convention) const -> SparseMatrix
{
    if (k < 1 || k > built_dim())
        throw InputError("boundary dimension out of range");
    auto & domain = _cells[k];
    SparseMatrix result(static_cast<int>(_cells[k - 1].size()), static_cast<int>(domain.size()));
    for (std::size_t j = 0 ; j < domain.size() ; ++j) {
        auto & column = result.columns[j];
        for_each_face(domain[j], convention, [&] (const Cell & face, int sign) {
            auto row = index_of(face);
            if (! row)
                throw StructuralError("cell complex is not closed under faces");
            column.emplace_back(*row, sign);
        });
        std::sort(column.begin(), column.end());
    }
    return result;
}

auto CellComplex::check_closed() const -> void
{
    for (int k = 1 ; k <= built_dim() ; ++k)
        for (auto & cell : _cells[k])
            for_each_face(cell, BoundaryConvention::standard, [&] (const Cell & face, int) {
                if (! index_of(face))
                    throw StructuralError("cell complex is not closed under faces");
            });
}

auto warmthkit::boundary_squares_vanish(const CellComplex & c, BoundaryConvention convention) -> bool
{
    for (int k = 2 ; k <= c.built_dim() ; ++k) {
        auto product = c.boundary(k - 1, convention).multiply(c.boundary(k, convention));
        if (! product.is_zero())
            return false;
    }
    return true;
}

auto warmthkit::skeleton_components(const CellComplex & c) -> int
{
    auto & points = c.cells(0);
    vector<int> parent(points.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&] (int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = static_cast<int>(points.size());
    for (auto & edge : c.cells(1)) {
        vector<int> ends;
        for_each_face(edge, BoundaryConvention::standard, [&] (const Cell & face, int) {
            ends.push_back(*c.index_of(face));
        });
        int a = find(ends[0]), b = find(ends[1]);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}
