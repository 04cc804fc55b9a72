#include <warmthkit/warmth.hh>
#include <warmthkit/chromatic.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/folding.hh>

#include "set_cover.hh"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

using namespace warmthkit;

using std::optional;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    class Deadline
    {
    private:
        std::chrono::steady_clock::time_point _end;
        bool _active = false;

    public:
        explicit Deadline(std::chrono::milliseconds budget)
        {
            if (budget.count() > 0) {
                _active = true;
                _end = std::chrono::steady_clock::now() + budget;
            }
        }

        auto check() const -> void
        {
            if (_active && std::chrono::steady_clock::now() > _end)
                throw BudgetExceeded();
        }
    };

    // Sorts members and remaps witness indices so index_of can binary search.
    auto make_family(int d, vector<VertexSet> members, vector<vector<int>> witnesses) -> StableFamily
    {
        vector<int> order(members.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&] (int x, int y) { return members[x] < members[y]; });
        vector<int> position(members.size());
        for (std::size_t i = 0 ; i < order.size() ; ++i)
            position[order[i]] = static_cast<int>(i);

        StableFamily family;
        family.d = d;
        for (int old : order) {
            family.members.push_back(std::move(members[old]));
            auto w = witnesses[old];
            for (auto & x : w)
                x = position[x];
            family.witnesses.push_back(std::move(w));
        }
        return family;
    }

    auto pad_witness(vector<int> w, int d) -> vector<int>
    {
        while (static_cast<int>(w.size()) < d)
            w.push_back(w.front());
        return w;
    }

    // All nonempty proper subsets as bitmasks, for n up to the exact cap.
    class ExactSearch
    {
    private:
        int _n;
        uint32_t _full;
        int _d;
        Deadline _deadline;
        vector<uint32_t> _nb;
        vector<uint8_t> _alive;
        vector<uint8_t> _is_n;
        vector<uint32_t> _n_list;

        // Neighborhood values N(B) over living B that contain a.
        auto supersets(uint32_t a) const -> vector<uint32_t>
        {
            vector<uint32_t> result;
            uint32_t outside = _full & ~a;
            int free_bits = std::popcount(outside);
            if (_n_list.size() <= (std::size_t{ 1 } << free_bits)) {
                for (auto y : _n_list)
                    if ((y & a) == a)
                        result.push_back(y);
            }
            else {
                for (uint32_t s = outside ; ; s = (s - 1) & outside) {
                    if (_is_n[a | s])
                        result.push_back(a | s);
                    if (s == 0)
                        break;
                }
            }
            return result;
        }

        auto witness_cover(uint32_t a) const -> optional<vector<uint32_t>>
        {
            uint64_t target = _full & ~a;
            auto ys = supersets(a);
            vector<uint64_t> sets;
            sets.reserve(ys.size());
            for (auto y : ys)
                sets.push_back(target & ~uint64_t{ y });
            auto cover = detail::cover_within(target, sets, _d);
            if (! cover)
                return std::nullopt;
            vector<uint32_t> chosen;
            for (int j : *cover)
                chosen.push_back(ys[j]);
            if (chosen.empty())
                chosen.push_back(ys.front());
            return chosen;
        }

        auto collect_values() -> void
        {
            std::fill(_is_n.begin(), _is_n.end(), 0);
            _n_list.clear();
            for (uint32_t a = 1 ; a < _full ; ++a)
                if (_alive[a] && ! _is_n[_nb[a]]) {
                    _is_n[_nb[a]] = 1;
                    _n_list.push_back(_nb[a]);
                }
        }

    public:
        ExactSearch(const Graph & g, int d, std::chrono::milliseconds budget) :
            _n(g.size()),
            _full((uint32_t{ 1 } << g.size()) - 1),
            _d(d),
            _deadline(budget)
        {
            std::size_t count = std::size_t{ 1 } << _n;
            auto masks = g.neighborhood_masks();
            _nb.assign(count, 0);
            for (uint32_t a = 1 ; a <= _full ; ++a)
                _nb[a] = _nb[a & (a - 1)] | static_cast<uint32_t>(masks[std::countr_zero(a)]);
            _alive.assign(count, 1);
            _alive[0] = 0;
            _alive[_full] = 0;
            _is_n.assign(count, 0);
        }

        auto run() -> optional<StableFamily>
        {
            std::size_t count = std::size_t{ 1 } << _n;
            vector<uint32_t> meet(count);
            while (true) {
                _deadline.check();
                collect_values();
                // meet[x] = intersection of all neighborhood values containing x
                for (uint32_t x = _full ; ; --x) {
                    uint32_t m = _is_n[x] ? x : _full;
                    for (uint32_t rest = _full & ~x ; rest && m != x ; rest &= rest - 1)
                        m &= meet[x | (rest & -rest)];
                    meet[x] = m;
                    if (x == 0)
                        break;
                }

                vector<uint32_t> doomed;
                long long checked = 0;
                for (uint32_t a = 1 ; a < _full ; ++a) {
                    if (! _alive[a])
                        continue;
                    if ((++checked & 1023) == 0)
                        _deadline.check();
                    if (meet[a] != a)
                        doomed.push_back(a);
                    else if (std::popcount(_full & ~a) > _d && ! witness_cover(a))
                        doomed.push_back(a);
                }
                if (doomed.empty())
                    break;
                for (auto a : doomed)
                    _alive[a] = 0;
            }
            return extract();
        }

        auto extract() -> optional<StableFamily>
        {
            collect_values();
            std::size_t count = std::size_t{ 1 } << _n;
            vector<int> index(count, -1);
            vector<uint32_t> rep(count, 0);
            vector<VertexSet> members;
            for (uint32_t a = 1 ; a < _full ; ++a)
                if (_alive[a]) {
                    index[a] = static_cast<int>(members.size());
                    members.push_back(VertexSet::from_mask(_n, a));
                    if (! rep[_nb[a]])
                        rep[_nb[a]] = a;
                }
            if (members.empty())
                return std::nullopt;

            vector<vector<int>> witnesses;
            witnesses.reserve(members.size());
            for (uint32_t a = 1 ; a < _full ; ++a)
                if (_alive[a]) {
                    _deadline.check();
                    auto cover = witness_cover(a);
                    if (! cover)
                        throw StructuralError("fixed point member without a witness");
                    vector<int> w;
                    for (auto y : *cover)
                        w.push_back(index[rep[y]]);
                    witnesses.push_back(pad_witness(std::move(w), _d));
                }
            return make_family(_d, std::move(members), std::move(witnesses));
        }
    };

    auto heuristic_universe(const Graph & g, const vector<VertexSet> & seeds, std::size_t limit) -> vector<VertexSet>
    {
        vector<VertexSet> universe;
        std::unordered_set<VertexSet, VertexSetHash> seen;
        auto add = [&] (const VertexSet & s) {
            if (universe.size() >= limit || s.empty() || s.is_full())
                return;
            if (seen.insert(s).second)
                universe.push_back(s);
        };
        for (int v = 0 ; v < g.size() ; ++v) {
            VertexSet single(g.size());
            single.set(v);
            add(single);
            add(g.neighborhood(v));
        }
        for (std::size_t i = 0 ; i < universe.size() && universe.size() < limit ; ++i) {
            add(g.neighborhood(universe[i]));
            for (std::size_t j = 0 ; j < i && universe.size() < limit ; ++j)
                add(universe[i] & universe[j]);
        }
        // seeds always get in, even past the limit
        for (auto & s : seeds) {
            if (s.universe() != g.size())
                throw InputError("seed set has the wrong universe");
            if (! s.empty() && ! s.is_full() && seen.insert(s).second)
                universe.push_back(s);
        }
        return universe;
    }
}

auto StableFamily::index_of(const VertexSet & a) const -> optional<int>
{
    auto it = std::lower_bound(members.begin(), members.end(), a);
    if (it != members.end() && *it == a)
        return static_cast<int>(it - members.begin());
    // fall back for families built by hand in arbitrary order
    for (std::size_t i = 0 ; i < members.size() ; ++i)
        if (members[i] == a)
            return static_cast<int>(i);
    return std::nullopt;
}

auto StableFamily::witness_closure(int root) const -> StableFamily
{
    vector<int> remap(members.size(), -1);
    vector<int> order{ root };
    remap[root] = 0;
    for (std::size_t i = 0 ; i < order.size() ; ++i)
        for (int w : witnesses[order[i]])
            if (remap[w] < 0) {
                remap[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
    vector<VertexSet> sub_members;
    vector<vector<int>> sub_witnesses;
    for (int old : order) {
        sub_members.push_back(members[old]);
        auto w = witnesses[old];
        for (auto & x : w)
            x = remap[x];
        sub_witnesses.push_back(std::move(w));
    }
    return make_family(d, std::move(sub_members), std::move(sub_witnesses));
}

auto warmthkit::stable_family_defect(const Graph & g, const StableFamily & family) -> std::string
{
    if (family.d < 1)
        return "d must be at least 1";
    if (family.members.empty())
        return "family is empty";
    if (family.witnesses.size() != family.members.size())
        return "witness table does not match members";
    for (std::size_t i = 0 ; i < family.members.size() ; ++i) {
        auto & a = family.members[i];
        std::string name = "member " + a.to_string();
        if (a.universe() != g.size())
            return name + " has the wrong universe";
        if (a.empty())
            return name + " is empty";
        if (a.is_full())
            return name + " is not a proper subset";
        auto & w = family.witnesses[i];
        if (static_cast<int>(w.size()) != family.d)
            return name + " has " + std::to_string(w.size()) + " witnesses";
        auto meet = VertexSet::full(g.size());
        for (int x : w) {
            if (x < 0 || x >= static_cast<int>(family.members.size()))
                return name + " has a witness outside the family";
            meet &= g.neighborhood(family.members[x]);
        }
        if (meet != a)
            return name + " is not the intersection of its witness neighborhoods (got " + meet.to_string() + ")";
    }
    return {};
}

auto warmthkit::verify_stable_family(const Graph & g, const StableFamily & family) -> bool
{
    return stable_family_defect(g, family).empty();
}

auto warmthkit::to_string(WarmthMode mode) -> std::string
{
    return mode == WarmthMode::exact ? "exact" : "heuristic";
}

auto warmthkit::greatest_stable_subfamily(const Graph & g, int d, vector<VertexSet> candidates,
        std::chrono::milliseconds budget) -> optional<StableFamily>
{
    if (d < 1)
        throw InputError("d must be at least 1");
    Deadline deadline(budget);
    std::erase_if(candidates, [&] (const VertexSet & s) {
        if (s.universe() != g.size())
            throw InputError("candidate set has the wrong universe");
        return s.empty() || s.is_full();
    });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    vector<VertexSet> nbs;
    nbs.reserve(candidates.size());
    for (auto & a : candidates)
        nbs.push_back(g.neighborhood(a));
    vector<uint8_t> alive(candidates.size(), 1);

    // distinct neighborhood values among survivors, with one member realising each
    vector<VertexSet> values;
    vector<int> value_rep;
    auto collect = [&] {
        values.clear();
        value_rep.clear();
        std::unordered_map<VertexSet, int, VertexSetHash> seen;
        for (std::size_t i = 0 ; i < candidates.size() ; ++i)
            if (alive[i] && seen.emplace(nbs[i], static_cast<int>(values.size())).second) {
                values.push_back(nbs[i]);
                value_rep.push_back(static_cast<int>(i));
            }
    };
    auto witness = [&] (const VertexSet & a) -> optional<vector<int>> {
        auto target = a.complement();
        vector<VertexSet> sets;
        vector<int> which;
        auto meet = VertexSet::full(g.size());
        for (std::size_t j = 0 ; j < values.size() ; ++j)
            if (a.is_subset_of(values[j])) {
                meet &= values[j];
                sets.push_back(target - values[j]);
                which.push_back(static_cast<int>(j));
            }
        if (which.empty() || meet != a)
            return std::nullopt;
        auto cover = detail::cover_within(target, sets, d);
        if (! cover)
            return std::nullopt;
        vector<int> result;
        for (int j : *cover)
            result.push_back(value_rep[which[j]]);
        return result;
    };

    while (true) {
        deadline.check();
        collect();
        vector<std::size_t> doomed;
        for (std::size_t i = 0 ; i < candidates.size() ; ++i) {
            if (! alive[i])
                continue;
            if ((i & 255) == 0)
                deadline.check();
            if (! witness(candidates[i]))
                doomed.push_back(i);
        }
        if (doomed.empty())
            break;
        for (auto i : doomed)
            alive[i] = 0;
    }

    collect();
    vector<int> index(candidates.size(), -1);
    vector<VertexSet> members;
    for (std::size_t i = 0 ; i < candidates.size() ; ++i)
        if (alive[i]) {
            index[i] = static_cast<int>(members.size());
            members.push_back(candidates[i]);
        }
    if (members.empty())
        return std::nullopt;
    vector<vector<int>> witnesses;
    for (std::size_t i = 0 ; i < candidates.size() ; ++i)
        if (alive[i]) {
            auto w = *witness(candidates[i]);
            for (auto & x : w)
                x = index[x];
            if (w.empty())
                throw StructuralError("fixed point member without a witness");
            witnesses.push_back(pad_witness(std::move(w), d));
        }
    return make_family(d, std::move(members), std::move(witnesses));
}

auto warmthkit::d_stable_family_exists(const Graph & g, int d, const StableSearchOptions & options) -> optional<StableFamily>
{
    if (d < 1)
        throw InputError("d must be at least 1");
    if (options.mode == WarmthMode::heuristic)
        return greatest_stable_subfamily(g, d, heuristic_universe(g, options.seeds, options.heuristic_limit), options.budget);

    int cap = std::min(options.exact_cap, exact_hard_cap);
    if (g.size() > cap)
        throw CapacityError("exact stable-family search is limited to " + std::to_string(cap)
                + " vertices; use heuristic mode");
    if (g.size() < 2)
        return std::nullopt;
    ExactSearch search(g, d, options.budget);
    return search.run();
}

auto warmthkit::minimal_witness_size(const Graph & g, const vector<VertexSet> & family, const VertexSet & a) -> optional<int>
{
    if (a.universe() != g.size() || a.empty() || a.is_full())
        throw InputError("witness target must be a nonempty proper subset");
    auto target = a.complement();
    vector<VertexSet> sets;
    vector<VertexSet> distinct;
    auto meet = VertexSet::full(g.size());
    for (auto & b : family) {
        auto nb = g.neighborhood(b);
        if (! a.is_subset_of(nb))
            continue;
        meet &= nb;
        sets.push_back(target - nb);
    }
    if (sets.empty() || meet != a)
        return std::nullopt;
    auto cover = detail::minimum_cover(target, sets);
    if (! cover)
        return std::nullopt;
    return std::max<int>(1, static_cast<int>(cover->size()));
}

auto WarmthResult::to_string() const -> std::string
{
    if (infinite)
        return "inf";
    if (exact())
        return std::to_string(*hi);
    return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
}

auto warmthkit::girth_family(const Graph & g) -> optional<StableFamily>
{
    auto girth_value = girth(g);
    if (! girth_value || *girth_value < 5)
        return std::nullopt;
    auto cyc = *shortest_cycle(g);
    int len = static_cast<int>(cyc.size());
    vector<VertexSet> members;
    vector<vector<int>> witnesses;
    for (int i = 0 ; i < len ; ++i) {
        VertexSet s(g.size());
        s.set(cyc[i]);
        members.push_back(s);
        witnesses.push_back({ (i + len - 1) % len, (i + 1) % len });
    }
    return make_family(2, std::move(members), std::move(witnesses));
}

namespace
{
    auto component_family(const Graph & g) -> StableFamily
    {
        auto comp = components(g);
        for (int v = 0 ; v < g.size() ; ++v)
            if (g.degree(v) > 0) {
                VertexSet part(g.size());
                for (int u = 0 ; u < g.size() ; ++u)
                    if (comp[u] == comp[v])
                        part.set(u);
                return make_family(1, { part }, { { 0 } });
            }
        throw InputError("graph has no edges");
    }

    auto bipartition_family(const Bipartition & bip) -> StableFamily
    {
        auto p0 = bip.part(0), p1 = bip.part(1);
        return make_family(1, { p0, p1 }, { { 1 }, { 0 } });
    }

    auto chromatic_cap(const ChromaticResult & chi, int n) -> int
    {
        return chi.infinite ? n - 1 : chi.hi - 1;
    }
}

auto warmthkit::warmth(const Graph & g, const WarmthOptions & options) -> WarmthResult
{
    if (g.edge_count() == 0)
        throw InputError("warmth needs a graph with at least one edge");

    WarmthResult result;
    result.mode = options.mode;
    vector<int> identity(g.size());
    std::iota(identity.begin(), identity.end(), 0);

    if (! is_connected(g)) {
        result.hi = 2;
        result.method = "disconnected";
        result.certificate = component_family(g);
        result.certificate_vertices = identity;
        return result;
    }
    auto bip = is_bipartite(g);
    if (bip.bipartite) {
        result.hi = 2;
        result.method = "bipartite";
        result.certificate = bipartition_family(bip);
        result.certificate_vertices = identity;
        return result;
    }
    // connected and not bipartite: a 1-stable family would be fixed by a power of N, which fills V
    result.lo = 3;

    Graph work = g;
    vector<int> original = identity;
    if (options.fold) {
        auto reduced = stiff_reduction(g);
        if (reduced.graph.size() == 1 && reduced.graph.has_loop(0)) {
            result.infinite = true;
            result.hi.reset();
            result.method = "dismantlable";
            return result;
        }
        work = std::move(reduced.graph);
        original = std::move(reduced.original);
    }
    result.certificate_vertices = original;

    if (work.loop_free()) {
        if (auto family = girth_family(work)) {
            result.hi = 3;
            result.method = "girth";
            result.certificate = std::move(family);
            return result;
        }
    }

    auto chi = chromatic_number(work, options.chromatic_budget);
    int natural_cap = chromatic_cap(chi, work.size());
    int cap = std::min(options.d_cap.value_or(natural_cap), work.size() - 1);
    std::optional<int> chi_bound = chi.infinite ? std::nullopt : std::optional<int>(chi.hi);

    StableSearchOptions search;
    search.mode = options.mode;
    search.exact_cap = options.exact_cap;
    search.heuristic_limit = options.heuristic_limit;
    search.budget = options.budget;
    for (auto & s : options.seeds) {
        // seeds are given on the input graph; keep those inside the residue
        VertexSet restricted(work.size());
        bool inside = true;
        s.for_each([&] (int v) {
            auto it = std::find(original.begin(), original.end(), v);
            if (it == original.end())
                inside = false;
            else
                restricted.set(static_cast<int>(it - original.begin()));
        });
        if (inside)
            search.seeds.push_back(restricted);
    }
    if (options.mode == WarmthMode::exact && work.size() > std::min(options.exact_cap, exact_hard_cap))
        throw CapacityError("graph has " + std::to_string(work.size()) + " vertices after folding, above the exact cap of "
                + std::to_string(options.exact_cap) + "; use heuristic mode");

    result.method = "search";
    int d = 2;
    try {
        for ( ; d <= cap ; ++d) {
            auto family = d_stable_family_exists(work, d, search);
            if (family) {
                result.hi = d + 1;
                if (options.mode == WarmthMode::exact)
                    result.lo = d + 1;
                result.certificate = std::move(family);
                return result;
            }
            if (options.mode == WarmthMode::exact)
                result.lo = d + 2;
        }
    }
    catch (const BudgetExceeded &) {
        result.budget_exhausted = true;
        result.hi = chi_bound;
        result.method = "budget";
        return result;
    }

    if (options.mode == WarmthMode::exact) {
        if (cap >= work.size() - 1) {
            // witnesses never need more than n - 1 distinct sets, so no d works
            result.infinite = true;
            result.hi.reset();
            result.method = "exhausted";
            return result;
        }
        if (chi_bound && cap >= *chi_bound - 1 && chi.exact)
            throw StructuralError("no stable family below the chromatic number; warmth cannot exceed it");
    }
    result.hi = chi_bound;
    if (chi_bound && result.lo > *chi_bound)
        throw StructuralError("warmth lower bound exceeds the chromatic number");
    return result;
}
