#include <warmthkit/vertex_set.hh>

#include <algorithm>

using namespace warmthkit;

VertexSet::VertexSet(int universe) :
    _universe(universe),
    _words((universe + 63) / 64, 0)
{
}

auto VertexSet::trim() -> void
{
    if (_universe % 64 != 0 && ! _words.empty())
        _words.back() &= (std::uint64_t{ 1 } << (_universe % 64)) - 1;
}

auto VertexSet::full(int universe) -> VertexSet
{
    VertexSet result(universe);
    std::fill(result._words.begin(), result._words.end(), ~std::uint64_t{ 0 });
    result.trim();
    return result;
}

auto VertexSet::from_mask(int universe, std::uint64_t mask) -> VertexSet
{
    VertexSet result(universe);
    if (! result._words.empty())
        result._words[0] = mask;
    result.trim();
    return result;
}

auto VertexSet::from_list(int universe, const std::vector<int> & members) -> VertexSet
{
    VertexSet result(universe);
    for (int v : members)
        result.set(v);
    return result;
}

auto VertexSet::count() const -> int
{
    int result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(_words.begin(), _words.end(), [] (auto w) { return w == 0; });
}

auto VertexSet::is_full() const -> bool
{
    return count() == _universe;
}

auto VertexSet::first() const -> int
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w])
            return static_cast<int>(w * 64 + std::countr_zero(_words[w]));
    return -1;
}

auto VertexSet::next(int v) const -> int
{
    int start = v + 1;
    if (start >= _universe)
        return -1;
    std::size_t w = start >> 6;
    auto bits = _words[w] & (~std::uint64_t{ 0 } << (start & 63));
    while (true) {
        if (bits)
            return static_cast<int>(w * 64 + std::countr_zero(bits));
        if (++w >= _words.size())
            return -1;
        bits = _words[w];
    }
}

auto VertexSet::members() const -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(count());
    for_each([&] (int v) { result.push_back(v); });
    return result;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w] & ~other._words[w])
            return false;
    return true;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w] & other._words[w])
            return true;
    return false;
}

auto VertexSet::complement() const -> VertexSet
{
    VertexSet result(*this);
    for (auto & w : result._words)
        w = ~w;
    result.trim();
    return result;
}

auto VertexSet::to_mask() const -> std::uint64_t
{
    return _words.empty() ? 0 : _words[0];
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] &= other._words[w];
    return *this;
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] |= other._words[w];
    return *this;
}

auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] &= ~other._words[w];
    return *this;
}

auto VertexSet::operator<=>(const VertexSet & other) const -> std::strong_ordering
{
    if (auto c = _universe <=> other._universe ; c != 0)
        return c;
    // compare as sorted member lists, lowest vertex first
    for (std::size_t w = 0 ; w < _words.size() ; ++w) {
        if (_words[w] == other._words[w])
            continue;
        auto diff = _words[w] ^ other._words[w];
        int x = static_cast<int>(w * 64 + std::countr_zero(diff));
        bool mine = test(x);
        // the set lacking x is smaller only if its member list ends before x
        const VertexSet & lacking = mine ? other : *this;
        bool lacking_continues = lacking.next(x) != -1;
        return (mine == lacking_continues) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

auto VertexSet::hash() const -> std::size_t
{
    std::size_t h = 1469598103934665603ULL ^ static_cast<std::size_t>(_universe);
    for (auto w : _words) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

auto VertexSet::to_string() const -> std::string
{
    std::string result = "{";
    bool first_member = true;
    for_each([&] (int v) {
        if (! first_member)
            result += ",";
        result += std::to_string(v);
        first_member = false;
    });
    return result + "}";
}
