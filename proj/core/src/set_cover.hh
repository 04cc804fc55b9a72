#ifndef WARMTHKIT_SET_COVER_HH
#define WARMTHKIT_SET_COVER_HH

// Small exact set cover: can target be covered by at most limit of the given sets?
// Used for witness checks, where target is the complement of a candidate and each
// set is the part of it missed by one neighborhood.

#include <warmthkit/vertex_set.hh>

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

namespace warmthkit::detail
{
    inline auto bits_count(std::uint64_t x) -> int { return std::popcount(x); }
    inline auto bits_empty(std::uint64_t x) -> bool { return x == 0; }
    inline auto bits_test(std::uint64_t x, int i) -> bool { return (x >> i) & 1; }
    inline auto bits_and(std::uint64_t a, std::uint64_t b) -> std::uint64_t { return a & b; }
    inline auto bits_minus(std::uint64_t a, std::uint64_t b) -> std::uint64_t { return a & ~b; }
    inline auto bits_subset(std::uint64_t a, std::uint64_t b) -> bool { return (a & ~b) == 0; }

    template <typename F>
    auto bits_for_each(std::uint64_t x, F && f) -> void
    {
        for ( ; x ; x &= x - 1)
            f(std::countr_zero(x));
    }

    inline auto bits_count(const VertexSet & x) -> int { return x.count(); }
    inline auto bits_empty(const VertexSet & x) -> bool { return x.empty(); }
    inline auto bits_test(const VertexSet & x, int i) -> bool { return x.test(i); }
    inline auto bits_and(const VertexSet & a, const VertexSet & b) -> VertexSet { return a & b; }
    inline auto bits_minus(const VertexSet & a, const VertexSet & b) -> VertexSet { return a - b; }
    inline auto bits_subset(const VertexSet & a, const VertexSet & b) -> bool { return a.is_subset_of(b); }

    template <typename F>
    auto bits_for_each(const VertexSet & x, F && f) -> void
    {
        x.for_each(f);
    }

    template <typename Bits>
    class CoverSearch
    {
    private:
        const std::vector<Bits> & _sets;
        std::vector<int> _order;
        int _limit = 0;

        auto dfs(const Bits & uncovered, int depth) -> bool
        {
            if (bits_empty(uncovered))
                return true;
            if (depth == _limit)
                return false;

            // branch on the element with fewest covering sets
            int pick = -1, pick_count = INT_MAX, best_gain = 0;
            bits_for_each(uncovered, [&] (int e) {
                if (pick_count == 0)
                    return;
                int c = 0;
                for (int j : _order)
                    c += bits_test(_sets[j], e);
                if (c < pick_count) {
                    pick_count = c;
                    pick = e;
                }
            });
            if (pick_count == 0)
                return false;
            for (int j : _order)
                best_gain = std::max(best_gain, bits_count(bits_and(_sets[j], uncovered)));
            if (bits_count(uncovered) > best_gain * (_limit - depth))
                return false;

            for (int j : _order)
                if (bits_test(_sets[j], pick)) {
                    chosen.push_back(j);
                    if (dfs(bits_minus(uncovered, _sets[j]), depth + 1))
                        return true;
                    chosen.pop_back();
                }
            return false;
        }

    public:
        std::vector<int> chosen;

        explicit CoverSearch(const std::vector<Bits> & sets) :
            _sets(sets)
        {
            // drop sets contained in another; ties keep the first
            for (std::size_t j = 0 ; j < sets.size() ; ++j) {
                if (bits_empty(sets[j]))
                    continue;
                bool dominated = false;
                for (std::size_t i = 0 ; i < sets.size() && ! dominated ; ++i)
                    if (i != j && bits_subset(sets[j], sets[i]) && (! bits_subset(sets[i], sets[j]) || i < j))
                        dominated = true;
                if (! dominated)
                    _order.push_back(static_cast<int>(j));
            }
            std::stable_sort(_order.begin(), _order.end(), [&] (int x, int y) {
                return bits_count(sets[x]) > bits_count(sets[y]);
            });
        }

        auto run(const Bits & target, int limit) -> bool
        {
            chosen.clear();
            _limit = limit;
            return dfs(target, 0);
        }
    };

    template <typename Bits>
    auto greedy_cover(const Bits & target, const std::vector<Bits> & sets) -> std::optional<std::vector<int>>
    {
        std::vector<int> chosen;
        Bits uncovered = target;
        while (! bits_empty(uncovered)) {
            int best = -1, gain = 0;
            for (std::size_t j = 0 ; j < sets.size() ; ++j) {
                int c = bits_count(bits_and(sets[j], uncovered));
                if (c > gain) {
                    gain = c;
                    best = static_cast<int>(j);
                }
            }
            if (best < 0)
                return std::nullopt;
            chosen.push_back(best);
            uncovered = bits_minus(uncovered, sets[best]);
        }
        return chosen;
    }

    /// Indices of at most limit sets covering target, if possible.
    template <typename Bits>
    auto cover_within(const Bits & target, const std::vector<Bits> & sets, int limit) -> std::optional<std::vector<int>>
    {
        auto greedy = greedy_cover(target, sets);
        if (! greedy)
            return std::nullopt;
        if (static_cast<int>(greedy->size()) <= limit)
            return greedy;
        CoverSearch<Bits> search(sets);
        if (search.run(target, limit))
            return search.chosen;
        return std::nullopt;
    }

    /// A smallest cover, by iterative deepening below the greedy size.
    template <typename Bits>
    auto minimum_cover(const Bits & target, const std::vector<Bits> & sets) -> std::optional<std::vector<int>>
    {
        auto greedy = greedy_cover(target, sets);
        if (! greedy)
            return std::nullopt;
        CoverSearch<Bits> search(sets);
        for (int limit = 0 ; limit < static_cast<int>(greedy->size()) ; ++limit)
            if (search.run(target, limit))
                return search.chosen;
        return greedy;
    }
}

#endif
