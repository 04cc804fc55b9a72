#include <warmthkit/sparse_matrix.hh>

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <stdexcept>

using namespace warmthkit;

using std::pair;
using std::vector;

auto SparseMatrix::nonzeros() const -> long long
{
    long long result = 0;
    for (auto & col : columns)
        result += static_cast<long long>(col.size());
    return result;
}

auto SparseMatrix::multiply(const SparseMatrix & rhs) const -> SparseMatrix
{
    if (cols != rhs.rows)
        throw std::invalid_argument("matrix shapes do not match");
    SparseMatrix result(rows, rhs.cols);
    std::map<int, std::int64_t> accumulator;
    for (int j = 0 ; j < rhs.cols ; ++j) {
        accumulator.clear();
        for (auto [k, b] : rhs.columns[j])
            for (auto [i, a] : columns[k]) {
                std::int64_t product, sum;
                if (__builtin_mul_overflow(a, b, &product) || __builtin_add_overflow(accumulator[i], product, &sum))
                    throw std::overflow_error("matrix product overflows 64 bits");
                accumulator[i] = sum;
            }
        for (auto [i, v] : accumulator)
            if (v != 0)
                result.columns[j].emplace_back(i, v);
    }
    return result;
}

namespace
{
    struct Overflow
    {
    };

    auto is_unit(std::int64_t x) -> bool { return x == 1 || x == -1; }
    auto is_unit(const mpz_class & x) -> bool { return x == 1 || x == -1; }

    auto mul_sub(std::int64_t a, std::int64_t f, std::int64_t b) -> std::int64_t
    {
        // a - f * b
        std::int64_t product, result;
        if (__builtin_mul_overflow(f, b, &product) || __builtin_sub_overflow(a, product, &result))
            throw Overflow{ };
        return result;
    }

    auto mul_sub(const mpz_class & a, const mpz_class & f, const mpz_class & b) -> mpz_class
    {
        return a - f * b;
    }

    auto negate(std::int64_t a) -> std::int64_t
    {
        if (a == INT64_MIN)
            throw Overflow{ };
        return -a;
    }

    auto negate(const mpz_class & a) -> mpz_class { return -a; }

    auto to_mpz(std::int64_t x) -> mpz_class { return mpz_class(static_cast<long>(x)); }
    auto to_mpz(const mpz_class & x) -> mpz_class { return x; }

    template <typename T>
    class UnitEliminator
    {
    private:
        using Row = vector<pair<int, T>>;

        int _rows, _cols;
        vector<Row> _row;
        vector<vector<int>> _col_rows;
        vector<int> _col_count;
        vector<char> _row_alive, _col_alive;
        vector<int> _mark;
        int _stamp = 0;
        std::priority_queue<pair<int, int>, vector<pair<int, int>>, std::greater<>> _heap;

        auto find(const Row & row, int c) const -> const T *
        {
            auto it = std::lower_bound(row.begin(), row.end(), c, [] (auto & e, int key) { return e.first < key; });
            return (it != row.end() && it->first == c) ? &it->second : nullptr;
        }

        auto touch(int c) -> void
        {
            _heap.emplace(_col_count[c], c);
        }

        // row r := row r - f * row p, keeping column bookkeeping exact
        auto subtract(int r, const T & f, int p) -> void
        {
            Row merged;
            const Row & a = _row[r];
            const Row & b = _row[p];
            merged.reserve(a.size() + b.size());
            std::size_t i = 0, j = 0;
            while (i < a.size() || j < b.size()) {
                if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                    merged.push_back(a[i++]);
                }
                else if (i == a.size() || b[j].first < a[i].first) {
                    int c = b[j].first;
                    if (_col_alive[c]) {
                        merged.emplace_back(c, mul_sub(T(0), f, b[j].second));
                        ++_col_count[c];
                        _col_rows[c].push_back(r);
                        touch(c);
                    }
                    ++j;
                }
                else {
                    int c = a[i].first;
                    T value = mul_sub(a[i].second, f, b[j].second);
                    if (value != 0)
                        merged.emplace_back(c, std::move(value));
                    else {
                        --_col_count[c];
                        touch(c);
                    }
                    ++i;
                    ++j;
                }
            }
            _row[r] = std::move(merged);
        }

        auto live_rows(int c) -> vector<int>
        {
            ++_stamp;
            vector<int> result;
            for (int r : _col_rows[c])
                if (_row_alive[r] && _mark[r] != _stamp && find(_row[r], c)) {
                    _mark[r] = _stamp;
                    result.push_back(r);
                }
            _col_rows[c] = result;
            return result;
        }

    public:
        int rank = 0;

        explicit UnitEliminator(const SparseMatrix & m) :
            _rows(m.rows),
            _cols(m.cols),
            _row(m.rows),
            _col_rows(m.cols),
            _col_count(m.cols, 0),
            _row_alive(m.rows, 1),
            _col_alive(m.cols, 1),
            _mark(m.rows, 0)
        {
            for (int c = 0 ; c < m.cols ; ++c)
                for (auto [r, v] : m.columns[c]) {
                    _row[r].emplace_back(c, T(v));
                    _col_rows[c].push_back(r);
                    ++_col_count[c];
                }
        }

        auto run() -> void
        {
            vector<int> deferred;
            for (int c = 0 ; c < _cols ; ++c)
                touch(c);

            bool progress = true;
            while (progress) {
                progress = false;
                while (! _heap.empty()) {
                    auto [count, c] = _heap.top();
                    _heap.pop();
                    if (! _col_alive[c] || count != _col_count[c])
                        continue;
                    if (count == 0) {
                        _col_alive[c] = 0;
                        continue;
                    }
                    auto rows = live_rows(c);
                    int pivot = -1;
                    for (int r : rows)
                        if (is_unit(*find(_row[r], c)) && (pivot == -1 || _row[r].size() < _row[pivot].size()))
                            pivot = r;
                    if (pivot == -1) {
                        deferred.push_back(c);
                        continue;
                    }

                    T unit = *find(_row[pivot], c);
                    for (int r : rows) {
                        if (r == pivot)
                            continue;
                        T value = *find(_row[r], c);
                        T f = (unit == 1) ? value : negate(value);
                        subtract(r, f, pivot);
                    }
                    for (auto & [j, v] : _row[pivot])
                        if (j != c && _col_alive[j]) {
                            --_col_count[j];
                            touch(j);
                        }
                    _row_alive[pivot] = 0;
                    _row[pivot].clear();
                    _col_alive[c] = 0;
                    ++rank;
                    progress = true;
                }
                if (progress)
                    for (int c : deferred)
                        if (_col_alive[c])
                            touch(c);
                deferred.clear();
            }
        }

        /// The block that still needs the dense pass, as rows of mpz values.
        auto leftover() -> vector<vector<mpz_class>>
        {
            vector<int> col_index(_cols, -1);
            int live_cols = 0;
            for (int c = 0 ; c < _cols ; ++c)
                if (_col_alive[c] && _col_count[c] > 0)
                    col_index[c] = live_cols++;
            vector<vector<mpz_class>> result;
            for (int r = 0 ; r < _rows ; ++r) {
                if (! _row_alive[r])
                    continue;
                vector<mpz_class> dense(live_cols);
                bool any = false;
                for (auto & [c, v] : _row[r])
                    if (col_index[c] != -1) {
                        dense[col_index[c]] = to_mpz(v);
                        any = true;
                    }
                if (any)
                    result.push_back(std::move(dense));
            }
            return result;
        }
    };

    // Classical Smith normal form; returns the nonzero invariant factors.
    auto dense_smith(vector<vector<mpz_class>> a) -> vector<mpz_class>
    {
        vector<mpz_class> factors;
        int rows = static_cast<int>(a.size());
        int cols = rows ? static_cast<int>(a[0].size()) : 0;

        auto swap_cols = [&] (int x, int y) {
            for (auto & row : a)
                std::swap(row[x], row[y]);
        };

        for (int t = 0 ; t < std::min(rows, cols) ; ++t) {
            // smallest nonzero entry of the remaining block goes to (t, t)
            int bi = -1, bj = -1;
            for (int i = t ; i < rows ; ++i)
                for (int j = t ; j < cols ; ++j)
                    if (a[i][j] != 0 && (bi == -1 || abs(a[i][j]) < abs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == -1)
                break;
            std::swap(a[t], a[bi]);
            swap_cols(t, bj);

            while (true) {
                bool clean = true;
                for (int i = t + 1 ; i < rows ; ++i)
                    if (a[i][t] != 0) {
                        mpz_class q = a[i][t] / a[t][t];
                        for (int j = t ; j < cols ; ++j)
                            a[i][j] -= q * a[t][j];
                        if (a[i][t] != 0)
                            clean = false;
                    }
                for (int j = t + 1 ; j < cols ; ++j)
                    if (a[t][j] != 0) {
                        mpz_class q = a[t][j] / a[t][t];
                        for (int i = t ; i < rows ; ++i)
                            a[i][j] -= q * a[i][t];
                        if (a[t][j] != 0)
                            clean = false;
                    }
                if (! clean) {
                    // a remainder survived; bring the smallest one in row/column t to the pivot
                    int si = t, sj = t;
                    for (int i = t + 1 ; i < rows ; ++i)
                        if (a[i][t] != 0 && abs(a[i][t]) < abs(a[si][sj])) {
                            si = i;
                            sj = t;
                        }
                    for (int j = t + 1 ; j < cols ; ++j)
                        if (a[t][j] != 0 && abs(a[t][j]) < abs(a[si][sj])) {
                            si = t;
                            sj = j;
                        }
                    std::swap(a[t], a[si]);
                    swap_cols(t, sj);
                    continue;
                }
                int bad = -1;
                for (int i = t + 1 ; i < rows && bad == -1 ; ++i)
                    for (int j = t + 1 ; j < cols ; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            bad = i;
                            break;
                        }
                if (bad == -1)
                    break;
                for (int j = t ; j < cols ; ++j)
                    a[t][j] += a[bad][j];
            }
            factors.push_back(abs(a[t][t]));
        }
        return factors;
    }

    template <typename T>
    auto smith_with(const SparseMatrix & m) -> SmithSummary
    {
        UnitEliminator<T> eliminator(m);
        eliminator.run();
        auto rest = eliminator.leftover();
        SmithSummary result;
        result.rank = eliminator.rank;
        result.dense_rows = static_cast<int>(rest.size());
        result.dense_cols = rest.empty() ? 0 : static_cast<int>(rest[0].size());
        for (auto & f : dense_smith(std::move(rest))) {
            ++result.rank;
            if (f != 1) {
                if (! f.fits_slong_p())
                    throw std::overflow_error("torsion coefficient does not fit in 64 bits");
                result.torsion.push_back(f.get_si());
            }
        }
        std::sort(result.torsion.begin(), result.torsion.end());
        return result;
    }
}

auto warmthkit::smith_summary(const SparseMatrix & m) -> SmithSummary
{
    try {
        return smith_with<std::int64_t>(m);
    }
    catch (const Overflow &) {
        return smith_with<mpz_class>(m);
    }
}

auto modp::reduce(std::int64_t x) -> std::uint64_t
{
    auto r = x % static_cast<std::int64_t>(prime);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(prime) : r);
}

auto modp::add(std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
    auto s = a + b;
    return s >= prime ? s - prime : s;
}

auto modp::sub(std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
    return a >= b ? a - b : a + prime - b;
}

auto modp::mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & prime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return add(lo, hi);
}

auto modp::inverse(std::uint64_t a) -> std::uint64_t
{
    std::uint64_t result = 1, base = a, e = prime - 2;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

auto modp::Basis::insert(vector<std::uint64_t> v) -> bool
{
    for (std::size_t i = 0 ; i < _rows.size() ; ++i) {
        auto f = v[_pivots[i]];
        if (f == 0)
            continue;
        for (std::size_t j = 0 ; j < _dim ; ++j)
            if (_rows[i][j])
                v[j] = sub(v[j], mul(f, _rows[i][j]));
    }
    std::size_t pivot = 0;
    while (pivot < _dim && v[pivot] == 0)
        ++pivot;
    if (pivot == _dim)
        return false;
    auto scale = inverse(v[pivot]);
    for (auto & x : v)
        x = mul(x, scale);
    _rows.push_back(std::move(v));
    _pivots.push_back(pivot);
    return true;
}

auto modp::left_null_space(const SparseMatrix & m) -> vector<vector<std::uint64_t>>
{
    // fully reduced row echelon form of the column space of m
    std::size_t dim = m.rows;
    vector<vector<std::uint64_t>> rows;
    vector<std::size_t> pivots;
    for (auto & col : m.columns) {
        vector<std::uint64_t> v(dim, 0);
        for (auto [r, x] : col)
            v[r] = reduce(x);
        for (std::size_t i = 0 ; i < rows.size() ; ++i) {
            auto f = v[pivots[i]];
            if (f == 0)
                continue;
            for (std::size_t j = 0 ; j < dim ; ++j)
                if (rows[i][j])
                    v[j] = sub(v[j], mul(f, rows[i][j]));
        }
        std::size_t pivot = 0;
        while (pivot < dim && v[pivot] == 0)
            ++pivot;
        if (pivot == dim)
            continue;
        auto scale = inverse(v[pivot]);
        for (auto & x : v)
            x = mul(x, scale);
        // keep earlier rows reduced against the new pivot
        for (auto & row : rows) {
            auto f = row[pivot];
            if (f == 0)
                continue;
            for (std::size_t j = 0 ; j < dim ; ++j)
                if (v[j])
                    row[j] = sub(row[j], mul(f, v[j]));
        }
        rows.push_back(std::move(v));
        pivots.push_back(pivot);
    }

    vector<char> is_pivot(dim, 0);
    for (auto p : pivots)
        is_pivot[p] = 1;
    vector<vector<std::uint64_t>> result;
    for (std::size_t free = 0 ; free < dim ; ++free) {
        if (is_pivot[free])
            continue;
        vector<std::uint64_t> f(dim, 0);
        f[free] = 1;
        for (std::size_t i = 0 ; i < rows.size() ; ++i)
            f[pivots[i]] = sub(0, rows[i][free]);
        result.push_back(std::move(f));
    }
    return result;
}
