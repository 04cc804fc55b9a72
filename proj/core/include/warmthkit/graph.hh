#ifndef WARMTHKIT_GRAPH_HH
#define WARMTHKIT_GRAPH_HH

#include <warmthkit/vertex_set.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace warmthkit
{
    /// Hard upper bound on the vertex count of any Graph.
    inline constexpr int max_vertices = 1024;

    /// Vertex count beyond which the single-word kernels refuse to run.
    inline constexpr int word_vertices = 64;

    /**
     * Finite simple graph on vertices 0..n-1. Loops are allowed and live on
     * the diagonal of the adjacency bitsets; adjacency is kept symmetric by
     * add_edge. Optional string labels record the names vertices had in an
     * input file.
     */
    class Graph
    {
    private:
        int _n;
        std::vector<VertexSet> _adj;
        std::vector<std::string> _labels;

        auto check(int v) const -> void;

    public:
        explicit Graph(int n);

        auto add_edge(int u, int v) -> void;

        auto size() const -> int { return _n; }
        auto adjacent(int u, int v) const -> bool { return _adj[u].test(v); }
        auto has_loop(int v) const -> bool { return _adj[v].test(v); }

        /// N(v), with v itself included exactly when v is looped.
        auto neighborhood(int v) const -> const VertexSet &;

        /// N(A) = union of N(a) over a in A; N(empty) is empty.
        auto neighborhood(const VertexSet & a) const -> VertexSet;

        /// Common neighborhood: intersection of N(a) over a in A, or every vertex for empty A.
        auto common_neighborhood(const VertexSet & a) const -> VertexSet;

        auto degree(int v) const -> int { return _adj[v].count(); }

        /// Edges with loops counted once each.
        auto edge_count() const -> int;
        auto loop_count() const -> int;
        auto loop_free() const -> bool { return loop_count() == 0; }

        /// Sorted list of pairs (u, v) with u <= v.
        auto edges() const -> std::vector<std::pair<int, int>>;

        auto all_vertices() const -> VertexSet { return VertexSet::full(_n); }

        auto induced_subgraph(const std::vector<int> & keep) const -> Graph;

        auto has_labels() const -> bool { return ! _labels.empty(); }
        auto label(int v) const -> std::string;
        auto set_labels(std::vector<std::string> labels) -> void;
        auto labels() const -> const std::vector<std::string> & { return _labels; }

        /// Only valid when size() <= 64.
        auto neighborhood_masks() const -> std::vector<std::uint64_t>;

        auto operator==(const Graph & other) const -> bool
        {
            return _n == other._n && _adj == other._adj;
        }
    };

    /// Range-checked N(v); throws RangeError for a vertex outside the graph.
    auto neighborhood(const Graph & g, int v) -> VertexSet;

    /// Range-checked N(A).
    auto set_neighborhood(const Graph & g, const VertexSet & a) -> VertexSet;

    struct Bipartition
    {
        bool bipartite = false;
        /// side[v] in {0,1}, meaningful only when bipartite; chosen per component.
        std::vector<int> side;

        auto part(int which) const -> VertexSet;
    };

    auto is_bipartite(const Graph & g) -> Bipartition;

    /// Component id per vertex, ids numbered 0.. in order of lowest vertex.
    auto components(const Graph & g) -> std::vector<int>;
    auto component_count(const Graph & g) -> int;
    auto is_connected(const Graph & g) -> bool;

    /// Length of a shortest cycle (a loop has length 1); nullopt for forests.
    auto girth(const Graph & g) -> std::optional<int>;

    /// A shortest cycle as a vertex sequence (without repeating the start).
    auto shortest_cycle(const Graph & g) -> std::optional<std::vector<int>>;

    /// Hash of the sorted edge list together with n, for identifying graphs in reports.
    auto canonical_hash(const Graph & g) -> std::uint64_t;
    auto canonical_hash_hex(const Graph & g) -> std::string;

    /// Vertex-disjoint union, vertices of b shifted by a.size().
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
}

#endif
