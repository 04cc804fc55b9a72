#include <warmthkit/graph.hh>
#include <warmthkit/errors.hh>

#include <algorithm>
#include <cstdio>
#include <queue>

using namespace warmthkit;

using std::optional;
using std::pair;
using std::string;
using std::vector;

Graph::Graph(int n) :
    _n(n)
{
    if (n < 1)
        throw InputError("graph must have at least one vertex");
    if (n > max_vertices)
        throw CapacityError("graph has " + std::to_string(n) + " vertices, limit is " + std::to_string(max_vertices));
    _adj.assign(n, VertexSet(n));
}

auto Graph::check(int v) const -> void
{
    if (v < 0 || v >= _n)
        throw RangeError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(_n) + " vertices");
}

auto Graph::add_edge(int u, int v) -> void
{
    check(u);
    check(v);
    _adj[u].set(v);
    _adj[v].set(u);
}

auto Graph::neighborhood(int v) const -> const VertexSet &
{
    return _adj[v];
}

auto Graph::neighborhood(const VertexSet & a) const -> VertexSet
{
    VertexSet result(_n);
    a.for_each([&] (int v) { result |= _adj[v]; });
    return result;
}

auto Graph::common_neighborhood(const VertexSet & a) const -> VertexSet
{
    auto result = VertexSet::full(_n);
    a.for_each([&] (int v) { result &= _adj[v]; });
    return result;
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (int v = 0 ; v < _n ; ++v)
        twice += _adj[v].count() + (has_loop(v) ? 1 : 0);
    return twice / 2;
}

auto Graph::loop_count() const -> int
{
    int result = 0;
    for (int v = 0 ; v < _n ; ++v)
        if (has_loop(v))
            ++result;
    return result;
}

auto Graph::edges() const -> vector<pair<int, int>>
{
    vector<pair<int, int>> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v = u ; v != -1 ; v = _adj[u].next(v)) {
            if (v == u && ! has_loop(u))
                continue;
            result.emplace_back(u, v);
        }
    return result;
}

auto Graph::induced_subgraph(const vector<int> & keep) const -> Graph
{
    Graph result(static_cast<int>(keep.size()));
    vector<int> position(_n, -1);
    for (std::size_t i = 0 ; i < keep.size() ; ++i) {
        check(keep[i]);
        position[keep[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0 ; i < keep.size() ; ++i)
        _adj[keep[i]].for_each([&] (int w) {
            if (position[w] != -1)
                result.add_edge(static_cast<int>(i), position[w]);
        });
    if (has_labels()) {
        vector<string> labels;
        for (int v : keep)
            labels.push_back(_labels[v]);
        result.set_labels(std::move(labels));
    }
    return result;
}

auto Graph::label(int v) const -> string
{
    return has_labels() ? _labels[v] : std::to_string(v);
}

auto Graph::set_labels(vector<string> labels) -> void
{
    if (! labels.empty() && static_cast<int>(labels.size()) != _n)
        throw InputError("label table size does not match vertex count");
    _labels = std::move(labels);
}

auto Graph::neighborhood_masks() const -> vector<std::uint64_t>
{
    if (_n > word_vertices)
        throw CapacityError("operation needs at most 64 vertices");
    vector<std::uint64_t> result(_n);
    for (int v = 0 ; v < _n ; ++v)
        result[v] = _adj[v].to_mask();
    return result;
}

auto warmthkit::neighborhood(const Graph & g, int v) -> VertexSet
{
    if (v < 0 || v >= g.size())
        throw RangeError("vertex " + std::to_string(v) + " out of range");
    return g.neighborhood(v);
}

auto warmthkit::set_neighborhood(const Graph & g, const VertexSet & a) -> VertexSet
{
    if (a.universe() != g.size())
        throw RangeError("vertex set universe does not match graph");
    return g.neighborhood(a);
}

auto Bipartition::part(int which) const -> VertexSet
{
    VertexSet result(static_cast<int>(side.size()));
    for (std::size_t v = 0 ; v < side.size() ; ++v)
        if (side[v] == which)
            result.set(static_cast<int>(v));
    return result;
}

auto warmthkit::is_bipartite(const Graph & g) -> Bipartition
{
    Bipartition result;
    result.side.assign(g.size(), -1);
    for (int root = 0 ; root < g.size() ; ++root) {
        if (result.side[root] != -1)
            continue;
        result.side[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop();
            bool clash = false;
            g.neighborhood(u).for_each([&] (int w) {
                if (result.side[w] == -1) {
                    result.side[w] = 1 - result.side[u];
                    queue.push(w);
                }
                else if (result.side[w] == result.side[u])
                    clash = true;
            });
            if (clash) {
                result.bipartite = false;
                return result;
            }
        }
    }
    result.bipartite = true;
    return result;
}

auto warmthkit::components(const Graph & g) -> vector<int>
{
    vector<int> comp(g.size(), -1);
    int next_id = 0;
    for (int root = 0 ; root < g.size() ; ++root) {
        if (comp[root] != -1)
            continue;
        vector<int> stack{ root };
        comp[root] = next_id;
        while (! stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.neighborhood(u).for_each([&] (int w) {
                if (comp[w] == -1) {
                    comp[w] = next_id;
                    stack.push_back(w);
                }
            });
        }
        ++next_id;
    }
    return comp;
}

auto warmthkit::component_count(const Graph & g) -> int
{
    auto comp = components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

auto warmthkit::is_connected(const Graph & g) -> bool
{
    return component_count(g) == 1;
}

auto warmthkit::shortest_cycle(const Graph & g) -> optional<vector<int>>
{
    for (int v = 0 ; v < g.size() ; ++v)
        if (g.has_loop(v))
            return vector<int>{ v };

    int best = -1, best_u = -1, best_w = -1;
    vector<int> best_parent;
    vector<int> dist(g.size()), parent(g.size());
    for (int root = 0 ; root < g.size() ; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> queue;
        queue.push(root);
        bool improved = false;
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop();
            if (best != -1 && 2 * dist[u] + 1 >= best)
                break;
            g.neighborhood(u).for_each([&] (int w) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                }
                else if (w != parent[u] && u != parent[w]) {
                    int length = dist[u] + dist[w] + 1;
                    if (best == -1 || length < best) {
                        best = length;
                        best_u = u;
                        best_w = w;
                        improved = true;
                    }
                }
            });
        }
        if (improved)
            best_parent = parent;
    }

    if (best == -1)
        return std::nullopt;

    vector<int> left, right;
    for (int x = best_u ; x != -1 ; x = best_parent[x])
        left.push_back(x);
    for (int x = best_w ; x != -1 ; x = best_parent[x])
        right.push_back(x);
    // left runs u..root, right runs w..root; cycle is root..u then w..(before root)
    std::reverse(left.begin(), left.end());
    right.pop_back();
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

auto warmthkit::girth(const Graph & g) -> optional<int>
{
    auto cycle = shortest_cycle(g);
    if (! cycle)
        return std::nullopt;
    return static_cast<int>(cycle->size());
}

auto warmthkit::canonical_hash(const Graph & g) -> std::uint64_t
{
    // FNV-1a over n and the sorted edge list
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&] (std::uint64_t x) {
        for (int i = 0 ; i < 8 ; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.size()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

auto warmthkit::canonical_hash_hex(const Graph & g) -> string
{
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(canonical_hash(g)));
    return buffer;
}

auto warmthkit::disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    Graph result(a.size() + b.size());
    for (auto [u, v] : a.edges())
        result.add_edge(u, v);
    for (auto [u, v] : b.edges())
        result.add_edge(u + a.size(), v + a.size());
    return result;
}
