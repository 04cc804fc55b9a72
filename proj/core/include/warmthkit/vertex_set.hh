#ifndef WARMTHKIT_VERTEX_SET_HH
#define WARMTHKIT_VERTEX_SET_HH

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace warmthkit
{
    /**
     * A subset of the vertices 0..universe-1 of some ambient graph, stored as
     * a packed bitset. Binary operations require both operands to share the
     * same universe.
     */
    class VertexSet
    {
    private:
        int _universe = 0;
        std::vector<std::uint64_t> _words;

        auto trim() -> void;

    public:
        VertexSet() = default;
        explicit VertexSet(int universe);

        static auto full(int universe) -> VertexSet;
        static auto from_mask(int universe, std::uint64_t mask) -> VertexSet;
        static auto from_list(int universe, const std::vector<int> & members) -> VertexSet;

        auto universe() const -> int { return _universe; }

        auto test(int v) const -> bool
        {
            return (_words[v >> 6] >> (v & 63)) & 1;
        }

        auto set(int v) -> void { _words[v >> 6] |= std::uint64_t{ 1 } << (v & 63); }
        auto reset(int v) -> void { _words[v >> 6] &= ~(std::uint64_t{ 1 } << (v & 63)); }

        auto count() const -> int;
        auto empty() const -> bool;
        auto is_full() const -> bool;

        /// Lowest member, or -1.
        auto first() const -> int;
        /// Lowest member strictly greater than v, or -1.
        auto next(int v) const -> int;

        auto members() const -> std::vector<int>;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                auto bits = _words[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    f(static_cast<int>(w * 64 + b));
                    bits &= bits - 1;
                }
            }
        }

        auto is_subset_of(const VertexSet & other) const -> bool;
        auto intersects(const VertexSet & other) const -> bool;
        auto complement() const -> VertexSet;

        /// Only valid when universe() <= 64.
        auto to_mask() const -> std::uint64_t;

        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

        auto operator==(const VertexSet & other) const -> bool = default;
        auto operator<=>(const VertexSet & other) const -> std::strong_ordering;

        auto hash() const -> std::size_t;

        /// "{0,3,5}"
        auto to_string() const -> std::string;
    };

    struct VertexSetHash
    {
        auto operator()(const VertexSet & s) const -> std::size_t { return s.hash(); }
    };
}

#endif
