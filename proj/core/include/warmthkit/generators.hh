#ifndef WARMTHKIT_GENERATORS_HH
#define WARMTHKIT_GENERATORS_HH

#include <warmthkit/graph.hh>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace warmthkit
{
    auto empty_graph(int n) -> Graph;
    auto complete(int n) -> Graph;
    /// Loop-free cycle on m >= 3 vertices.
    auto cycle(int m) -> Graph;
    /// Cycle of even length with a loop on every vertex; length >= 2.
    auto looped_cycle(int length) -> Graph;
    auto complete_bipartite(int a, int b) -> Graph;
    /// Path on k >= 1 vertices.
    auto path(int k) -> Graph;

    /// Vertices are the k-subsets of {0..n-1} in lexicographic order, adjacent when disjoint.
    auto kneser(int n, int k) -> Graph;

    /// V, then the shadow copy V', then the apex z. Requires a loop-free input.
    auto mycielski(const Graph & g) -> Graph;

    /// An involutive automorphism, given as a vertex permutation.
    struct Z2Action
    {
        std::vector<int> perm;

        auto operator()(int v) const -> int { return perm[v]; }

        /// Throws InputError unless perm is an involutive automorphism of g.
        auto validate(const Graph & g) const -> void;

        static auto trivial(int n) -> Z2Action;
        /// Swaps the two vertices of K2.
        static auto swap() -> Z2Action;
        /// i -> i + length/2 on a cycle of even length.
        static auto antipodal(int length) -> Z2Action;
    };

    /**
     * G x_Z2 H: V(G) x V(H) modulo (gamma g, h) ~ (g, gamma h). Each class is
     * numbered by the rank of its lexicographically least representative.
     */
    struct TwistedProduct
    {
        Graph graph;
        /// quotient[g * |V(H)| + h] is the class of (g, h).
        std::vector<int> quotient;
        /// Least representative (g, h) of each class.
        std::vector<std::pair<int, int>> representatives;
        /// [g, h] -> [gamma g, h], used to iterate the construction.
        Z2Action action;
        int right_size = 0;

        auto class_of(int g, int h) const -> int { return quotient[g * right_size + h]; }
    };

    auto twisted_product(const Graph & g, const Z2Action & act_g, const Graph & h, const Z2Action & act_h) -> TwistedProduct;

    /// Categorical (direct) product; twisted_product with trivial actions.
    auto categorical_product(const Graph & g, const Graph & h) -> Graph;

    /**
     * T_{k,m} from its tuple description: classes of (eps, a_1..a_k) with
     * a_i in Z/2m, where flipping eps and adding m to one coordinate gives
     * the same vertex. Representatives keep every a_i in [0, m); vertex index
     * is eps * m^k + (a_1 .. a_k read in base m, a_1 most significant).
     */
    auto twisted_toroidal(int k, int m) -> Graph;

    /// The eps-flip involution on T_{k,m}, in the numbering of twisted_toroidal.
    auto twisted_toroidal_action(int k, int m) -> Z2Action;

    /// Index of the class of (eps, a) in twisted_toroidal(k, m); eps in {0, 1}.
    auto twisted_toroidal_index(int k, int m, int eps, std::vector<int> a) -> int;

    /// T_{k,m} built as the iterated product K2 x_Z2 C_2m x_Z2 ... x_Z2 C_2m.
    auto twisted_toroidal_recursive(int k, int m) -> TwistedProduct;

    /// Portable seeded generator; doubles are built from the top 53 bits of each draw.
    class Rng
    {
    private:
        std::mt19937_64 _engine;

    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) { }

        auto next() -> std::uint64_t { return _engine(); }
        /// Uniform in [0, 1).
        auto uniform() -> double { return static_cast<double>(_engine() >> 11) * 0x1.0p-53; }
        /// Uniform integer in [0, bound), by rejection.
        auto below(std::uint64_t bound) -> std::uint64_t;
    };

    auto erdos_renyi(int n, double p, std::uint64_t seed) -> Graph;

    struct DegreeSequence
    {
        std::vector<double> w;

        /// Throws InputError unless 0 <= w_i <= n-1 and w_i^2 <= sum w.
        auto validate() const -> void;
    };

    /// Edge ij (i != j) present with probability w_i w_j / sum w.
    auto chung_lu(const DegreeSequence & weights, std::uint64_t seed) -> Graph;
}

#endif
