#include <warmthkit/warmth.hh>
#include <warmthkit/errors.hh>

#include "set_cover.hh"

#include <algorithm>
#include <deque>
#include <map>

using namespace warmthkit;

using std::optional;
using std::vector;

auto warmthkit::generated_by_at_most(const Graph & g, int v, int k) -> optional<VertexSet>
{
    if (v < 0 || v >= g.size())
        throw RangeError("vertex " + std::to_string(v) + " out of range");
    if (k < 1)
        throw InputError("k must be at least 1");

    VertexSet target = g.all_vertices();
    target.reset(v);
    auto candidates = g.neighborhood(v).members();
    vector<VertexSet> sets;
    for (int u : candidates)
        sets.push_back(target - g.neighborhood(u));
    if (candidates.empty())
        return std::nullopt;
    if (target.empty())
        return VertexSet::from_list(g.size(), { candidates.front() });

    auto cover = detail::minimum_cover(target, sets);
    if (! cover || static_cast<int>(cover->size()) > k)
        return std::nullopt;
    VertexSet result(g.size());
    for (int j : *cover)
        result.set(candidates[j]);
    if (result.empty())
        result.set(candidates.front());
    return result;
}

namespace
{
    class BipartiteSearch
    {
    private:
        const Graph & _g;
        int _a;
        int _b;

    public:
        vector<int> side;
        VertexSet common;

        BipartiteSearch(const Graph & g, int a, int b) :
            _g(g),
            _a(a),
            _b(b),
            common(VertexSet::full(g.size()))
        {
        }

        // side grows in increasing order; common is the joint neighborhood minus side itself
        auto extend(int next, const VertexSet & joint) -> bool
        {
            if (static_cast<int>(side.size()) == _a) {
                common = joint;
                for (int x : side)
                    common.reset(x);
                return common.count() >= _b;
            }
            for (int v = next ; v < _g.size() ; ++v) {
                auto narrowed = joint & _g.neighborhood(v);
                int usable = narrowed.count();
                for (int x : side)
                    usable -= narrowed.test(x);
                usable -= narrowed.test(v);
                if (usable < _b)
                    continue;
                side.push_back(v);
                if (extend(v + 1, narrowed))
                    return true;
                side.pop_back();
            }
            return false;
        }
    };
}

auto warmthkit::find_complete_bipartite(const Graph & g, int a, int b) -> optional<std::pair<VertexSet, VertexSet>>
{
    if (a < 1 || b < 1)
        throw InputError("complete bipartite sides must be positive");
    if (a + b > g.size())
        return std::nullopt;
    // enumerate the smaller side; the other is read off the joint neighborhood
    bool swapped = a > b;
    if (swapped)
        std::swap(a, b);
    BipartiteSearch search(g, a, b);
    if (! search.extend(0, VertexSet::full(g.size())))
        return std::nullopt;
    auto left = VertexSet::from_list(g.size(), search.side);
    VertexSet right(g.size());
    for (int v = search.common.first(), taken = 0 ; taken < b ; v = search.common.next(v), ++taken)
        right.set(v);
    if (swapped)
        return std::make_pair(right, left);
    return std::make_pair(left, right);
}

auto warmthkit::action_displacement(const Graph & g, const Z2Action & action) -> optional<int>
{
    action.validate(g);
    optional<int> best;
    for (int v = 0 ; v < g.size() ; ++v) {
        int target = action(v);
        if (target == v)
            return 0;
        vector<int> dist(g.size(), -1);
        std::deque<int> queue{ v };
        dist[v] = 0;
        while (! queue.empty() && dist[target] < 0) {
            int x = queue.front();
            queue.pop_front();
            if (best && dist[x] + 1 >= *best)
                break;
            g.neighborhood(x).for_each([&] (int y) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            });
        }
        if (dist[target] >= 0 && (! best || dist[target] < *best))
            best = dist[target];
    }
    return best;
}

auto warmthkit::cycle_singleton_family(const Graph & cycle_graph) -> StableFamily
{
    int len = cycle_graph.size();
    if (len < 5)
        throw InputError("singleton cycle family needs length at least 5");
    StableFamily family;
    family.d = 2;
    for (int i = 0 ; i < len ; ++i) {
        if (! cycle_graph.adjacent(i, (i + 1) % len))
            throw InputError("graph is not a cycle in vertex order");
        family.members.push_back(VertexSet::from_list(len, { i }));
        family.witnesses.push_back({ (i + len - 1) % len, (i + 1) % len });
    }
    auto defect = stable_family_defect(cycle_graph, family);
    if (! defect.empty())
        throw InputError("cycle singletons are not 2-stable: " + defect);
    return family;
}

auto warmthkit::orbit_family(const Graph & g, const StableFamily & singletons, const Z2Action & action) -> StableFamily
{
    auto defect = stable_family_defect(g, singletons);
    if (! defect.empty())
        throw InputError("singleton family is not stable: " + defect);
    for (auto & m : singletons.members)
        if (m.count() != 1)
            throw InputError("orbit construction needs a family of singletons");
    auto displacement = action_displacement(g, action);
    if (displacement && *displacement < 5)
        throw InputError("action moves some vertex only " + std::to_string(*displacement)
                + " steps; orbits need at least 5");

    auto orbit = [&] (int x) { return VertexSet::from_list(g.size(), { x, action(x) }); };
    std::map<VertexSet, int> index;
    StableFamily family;
    family.d = singletons.d;
    for (auto & m : singletons.members) {
        auto o = orbit(m.first());
        if (index.emplace(o, static_cast<int>(family.members.size())).second)
            family.members.push_back(o);
    }
    family.witnesses.resize(family.members.size());
    for (std::size_t i = 0 ; i < singletons.members.size() ; ++i) {
        int target = index.at(orbit(singletons.members[i].first()));
        if (! family.witnesses[target].empty())
            continue;
        for (int w : singletons.witnesses[i])
            family.witnesses[target].push_back(index.at(orbit(singletons.members[w].first())));
    }
    defect = stable_family_defect(g, family);
    if (! defect.empty())
        throw StructuralError("orbit family failed verification: " + defect);
    return family;
}

auto warmthkit::lift_family(const TwistedProduct & product, const StableFamily & family,
        const Z2Action & action, Factor factor) -> StableFamily
{
    int right = product.right_size;
    int left = static_cast<int>(product.quotient.size()) / right;
    int factor_size = factor == Factor::right ? right : left;
    if (action.perm.size() != static_cast<std::size_t>(factor_size))
        throw InputError("action does not match the factor size");
    for (auto & m : family.members) {
        if (m.universe() != factor_size)
            throw InputError("family does not live on the chosen factor");
        VertexSet image(factor_size);
        m.for_each([&] (int x) { image.set(action(x)); });
        if (! family.contains(image))
            throw InputError("family is not invariant under the action");
    }

    int n = product.graph.size();
    StableFamily lifted;
    lifted.d = family.d;
    lifted.witnesses = family.witnesses;
    for (auto & m : family.members) {
        VertexSet b(n);
        m.for_each([&] (int x) {
            if (factor == Factor::right)
                for (int g = 0 ; g < left ; ++g)
                    b.set(product.class_of(g, x));
            else
                for (int h = 0 ; h < right ; ++h)
                    b.set(product.class_of(x, h));
        });
        lifted.members.push_back(b);
    }
    return lifted;
}

auto warmthkit::twisted_toroidal_certificate(int k, int m) -> std::pair<TwistedProduct, StableFamily>
{
    if (k < 1 || m < 5)
        throw InputError("the twisted toroidal certificate needs k >= 1 and m >= 5");
    auto base = twisted_toroidal_recursive(k - 1, m);
    auto cyc = looped_cycle(2 * m);
    auto antipodal = Z2Action::antipodal(2 * m);
    auto product = twisted_product(base.graph, base.action, cyc, antipodal);
    auto orbits = orbit_family(cyc, cycle_singleton_family(cyc), antipodal);
    auto family = lift_family(product, orbits, antipodal, Factor::right);
    auto defect = stable_family_defect(product.graph, family);
    if (! defect.empty())
        throw StructuralError("lifted family failed verification: " + defect);
    return { std::move(product), std::move(family) };
}
