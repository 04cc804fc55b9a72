#include <warmthkit/chains.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/sparse_matrix.hh>

#include <bit>
#include <unordered_set>

using namespace warmthkit;

using std::uint64_t;
using std::vector;

auto EvenClosedWalk::a(int i) const -> int
{
    int n = half_length();
    return vertices[2 * (((i % n) + n) % n)];
}

auto EvenClosedWalk::b(int i) const -> int
{
    int len = length();
    return vertices[(((2 * i - 1) % len) + len) % len];
}

auto EvenClosedWalk::repeated(int r) const -> EvenClosedWalk
{
    EvenClosedWalk result;
    for (int k = 0 ; k < r ; ++k)
        result.vertices.insert(result.vertices.end(), vertices.begin(), vertices.end());
    return result;
}

auto warmthkit::validate_walk(const Graph & g, const EvenClosedWalk & walk) -> void
{
    int len = walk.length();
    if (len == 0 || len % 2 != 0)
        throw InputError("closed walk must have even positive length");
    for (int v : walk.vertices)
        if (v < 0 || v >= g.size())
            throw RangeError("walk vertex " + std::to_string(v) + " out of range");
    for (int i = 0 ; i < len ; ++i)
        if (! g.adjacent(walk.vertices[i], walk.vertices[(i + 1) % len]))
            throw InputError("walk step " + std::to_string(i) + " is not an edge");
}

auto warmthkit::underlying_graph(const CellComplex & c) -> Graph
{
    Graph g(c.vertex_count());
    for (auto & cell : c.cells(0))
        g.add_edge(std::countr_zero(cell.sigma), std::countr_zero(cell.tau));
    return g;
}

auto warmthkit::walk_step_cell(const CellComplex & c, int before, int centre, int after, bool at_a) -> WalkStep
{
    if (before == after)
        return {};
    auto pair = (uint64_t{ 1 } << before) | (uint64_t{ 1 } << after);
    auto single = uint64_t{ 1 } << centre;
    Cell cell = at_a ? Cell{ single, pair } : Cell{ pair, single };
    auto index = c.index_of(cell);
    if (! index)
        throw StructuralError("walk step is not a cell of the complex");
    return { *index, before < after ? 1 : -1 };
}

auto warmthkit::cycle_chain(const CellComplex & c, const EvenClosedWalk & walk) -> Chain1
{
    validate_walk(underlying_graph(c), walk);
    if (c.built_dim() < 1) {
        // a complex with no 1-cells at all makes every step degenerate
        if (c.complete())
            return {};
        throw InputError("complex has no 1-cells built");
    }
    Chain1 chain{ vector<std::int64_t>(c.cells(1).size(), 0) };
    int len = walk.length();
    for (int t = 0 ; t < len ; ++t) {
        int before = walk.vertices[(t + len - 1) % len];
        int after = walk.vertices[(t + 1) % len];
        auto step = walk_step_cell(c, before, walk.vertices[t], after, t % 2 == 0);
        if (step.sign != 0)
            chain.coeffs[step.cell] += step.sign;
    }
    for (auto x : chain_boundary(c, chain))
        if (x != 0)
            throw StructuralError("walk chain is not a cycle");
    return chain;
}

auto warmthkit::chain_boundary(const CellComplex & c, const Chain1 & chain) -> vector<std::int64_t>
{
    if (c.built_dim() < 1 && c.complete() && chain.coeffs.empty())
        return vector<std::int64_t>(c.cells(0).size(), 0);
    auto d = c.boundary(1);
    vector<std::int64_t> result(d.rows, 0);
    for (int j = 0 ; j < d.cols ; ++j)
        if (chain.coeffs[j] != 0)
            for (auto [row, value] : d.columns[j])
                result[row] += value * chain.coeffs[j];
    return result;
}

H1Coordinates::H1Coordinates(const CellComplex & c)
{
    int top = c.top_dim();
    if (top < 1) {
        _columns.assign(c.cells(1).size(), {});
        return;
    }
    if (c.built_dim() < 2 && ! c.complete())
        throw InputError("H_1 coordinates need the complex built through dimension 2");
    std::size_t edges = c.cells(1).size();

    vector<vector<uint64_t>> cocycles;
    if (c.built_dim() >= 2)
        cocycles = modp::left_null_space(c.boundary(2));
    else
        for (std::size_t e = 0 ; e < edges ; ++e) {
            cocycles.emplace_back(edges, 0);
            cocycles.back()[e] = 1;
        }

    // coboundaries are the rows of the boundary out of dimension 1
    modp::Basis basis(edges);
    auto d1 = c.boundary(1);
    vector<vector<uint64_t>> rows(d1.rows, vector<uint64_t>(edges, 0));
    for (int j = 0 ; j < d1.cols ; ++j)
        for (auto [row, value] : d1.columns[j])
            rows[row][j] = modp::reduce(value);
    for (auto & row : rows)
        basis.insert(std::move(row));

    vector<vector<uint64_t>> representatives;
    for (auto & z : cocycles)
        if (basis.insert(z))
            representatives.push_back(std::move(z));
    _rank = representatives.size();

    _columns.assign(edges, vector<uint64_t>(_rank, 0));
    for (std::size_t e = 0 ; e < edges ; ++e)
        for (std::size_t r = 0 ; r < _rank ; ++r)
            _columns[e][r] = representatives[r][e];
}

auto H1Coordinates::of_chain(const Chain1 & chain) const -> vector<uint64_t>
{
    vector<uint64_t> result(_rank, 0);
    for (std::size_t e = 0 ; e < chain.coeffs.size() ; ++e)
        if (chain.coeffs[e] != 0) {
            auto scale = modp::reduce(chain.coeffs[e]);
            for (std::size_t r = 0 ; r < _rank ; ++r)
                result[r] = modp::add(result[r], modp::mul(scale, _columns[e][r]));
        }
    return result;
}

namespace
{
    struct WalkState
    {
        int parity;
        int prev;
        int cur;
        vector<uint64_t> coords;

        auto operator==(const WalkState &) const -> bool = default;
    };

    struct WalkStateHash
    {
        auto operator()(const WalkState & s) const -> std::size_t
        {
            uint64_t h = 0xcbf29ce484222325ULL;
            auto mix = [&] (uint64_t x) {
                h ^= x;
                h *= 0x100000001b3ULL;
            };
            mix(static_cast<uint64_t>(s.parity));
            mix(static_cast<uint64_t>(s.prev));
            mix(static_cast<uint64_t>(s.cur));
            for (auto x : s.coords)
                mix(x);
            return static_cast<std::size_t>(h);
        }
    };

    auto add_scaled(vector<uint64_t> & into, const vector<uint64_t> & v, int sign) -> void
    {
        for (std::size_t r = 0 ; r < into.size() ; ++r)
            into[r] = sign > 0 ? modp::add(into[r], v[r]) : modp::sub(into[r], v[r]);
    }
}

auto warmthkit::h1_span_check(const CellComplex & c, int walk_length_cap) -> SpanReport
{
    if (walk_length_cap < 2)
        throw InputError("walk length cap must be at least 2");
    H1Coordinates coords(c);
    SpanReport report;
    report.walk_length_cap = walk_length_cap;
    report.free_rank = static_cast<long long>(coords.rank());
    if (coords.rank() == 0) {
        report.spanned = true;
        return report;
    }

    auto g = underlying_graph(c);
    modp::Basis span(coords.rank());
    vector<uint64_t> zero(coords.rank(), 0);

    // States record (position parity, previous vertex, current vertex, class so far).
    // The class of any continuation depends only on that, so first visits suffice.
    for (int s = 0 ; s < g.size() && span.rank() < coords.rank() ; ++s)
        for (int last : g.neighborhood(s).members()) {
            std::unordered_set<WalkState, WalkStateHash> seen;
            vector<WalkState> layer{ WalkState{ 0, last, s, zero } };
            seen.insert(layer.front());
            for (int t = 0 ; t < walk_length_cap && ! layer.empty() ; ++t) {
                vector<WalkState> next_layer;
                for (auto & state : layer)
                    for (int w : g.neighborhood(state.cur).members()) {
                        auto step = walk_step_cell(c, state.prev, state.cur, w, state.parity == 0);
                        WalkState next{ 1 - state.parity, state.cur, w, state.coords };
                        if (step.sign != 0)
                            add_scaled(next.coords, coords.of_cell(step.cell), step.sign);
                        // closing: back at the start edge after an even number of steps
                        if (next.parity == 0 && next.prev == last && next.cur == s) {
                            span.insert(next.coords);
                            if (span.rank() == coords.rank())
                                break;
                        }
                        if (seen.insert(next).second)
                            next_layer.push_back(std::move(next));
                    }
                if (span.rank() == coords.rank())
                    break;
                report.states += static_cast<long long>(next_layer.size());
                if (report.states > max_walk_states) {
                    report.truncated = true;
                    break;
                }
                layer = std::move(next_layer);
            }
            if (span.rank() == coords.rank() || report.truncated)
                break;
        }

    report.span_rank = static_cast<long long>(span.rank());
    report.spanned = span.rank() == coords.rank();
    return report;
}

auto warmthkit::random_even_closed_walk(const Graph & g, Rng & rng, int max_length) -> std::optional<EvenClosedWalk>
{
    if (max_length < 2)
        throw InputError("closed walks have length at least 2");
    vector<int> active;
    for (int v = 0 ; v < g.size() ; ++v)
        if (g.degree(v) > 0)
            active.push_back(v);
    if (active.empty())
        return std::nullopt;

    auto random_neighbor = [&] (int v) {
        auto members = g.neighborhood(v).members();
        return members[rng.below(members.size())];
    };
    for (int attempt = 0 ; attempt < 1000 ; ++attempt) {
        int length = 2 * (1 + static_cast<int>(rng.below(static_cast<uint64_t>(max_length / 2))));
        EvenClosedWalk walk;
        walk.vertices.push_back(active[rng.below(active.size())]);
        while (walk.length() < length)
            walk.vertices.push_back(random_neighbor(walk.vertices.back()));
        if (g.adjacent(walk.vertices.back(), walk.vertices.front()))
            return walk;
    }
    int v = active[rng.below(active.size())];
    return EvenClosedWalk{ { v, random_neighbor(v) } };
}
