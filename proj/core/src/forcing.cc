#include <warmthkit/warmth.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/hom_complex.hh>
#include <warmthkit/sparse_matrix.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

using namespace warmthkit;

using std::optional;
using std::uint64_t;
using std::vector;

namespace
{
    // A walk prefix from an anchor: position on gamma (mod its length), the
    // last directed edge, and L * class - t * x, which is zero exactly when a
    // closed walk of length t = rL has class r x.
    struct ForceKey
    {
        int pos;
        int prev;
        int cur;
        vector<uint64_t> defect;

        auto operator==(const ForceKey &) const -> bool = default;
    };

    struct ForceKeyHash
    {
        auto operator()(const ForceKey & k) const -> std::size_t
        {
            uint64_t h = 0xcbf29ce484222325ULL;
            auto mix = [&] (uint64_t x) {
                h ^= x;
                h *= 0x100000001b3ULL;
            };
            mix(static_cast<uint64_t>(k.pos));
            mix(static_cast<uint64_t>(k.prev));
            mix(static_cast<uint64_t>(k.cur));
            for (auto x : k.defect)
                mix(x);
            return static_cast<std::size_t>(h);
        }
    };

    class Forcing
    {
    private:
        const Graph & _g;
        const CellComplex & _complex;
        const H1Coordinates & _coords;
        const EvenClosedWalk & _gamma;
        vector<uint64_t> _x;
        int _cap;
        long long _budget;

        auto step(const ForceKey & from, int next) const -> ForceKey
        {
            int len = _gamma.length();
            ForceKey to{ (from.pos + 1) % len, from.cur, next, from.defect };
            auto cell = walk_step_cell(_complex, from.prev, from.cur, next, from.pos % 2 == 0);
            auto scale = modp::reduce(len);
            for (std::size_t r = 0 ; r < to.defect.size() ; ++r) {
                uint64_t term = 0;
                if (cell.sign != 0) {
                    term = modp::mul(scale, _coords.of_cell(cell.cell)[r]);
                    if (cell.sign < 0)
                        term = modp::sub(0, term);
                }
                to.defect[r] = modp::sub(modp::add(to.defect[r], term), _x[r]);
            }
            return to;
        }

    public:
        long long states = 0;
        bool truncated = false;

        Forcing(const Graph & g, const CellComplex & complex, const H1Coordinates & coords,
                const EvenClosedWalk & gamma, vector<uint64_t> x, int cap) :
            _g(g),
            _complex(complex),
            _coords(coords),
            _gamma(gamma),
            _x(std::move(x)),
            _cap(cap),
            _budget(max_walk_states)
        {
        }

        /// Calls visit(pos, vertex) for every vertex at a position of some forcing walk through this start.
        template <typename F>
        auto run(int anchor_pos, int last, F && visit) -> void
        {
            int s = _gamma.vertices[anchor_pos];
            ForceKey start{ anchor_pos, last, s, vector<uint64_t>(_x.size(), 0) };
            std::unordered_map<ForceKey, int, ForceKeyHash> id;
            vector<ForceKey> keys{ start };
            vector<int> depth{ 0 };
            vector<vector<int>> preds(1);
            id.emplace(start, 0);

            for (std::size_t i = 0 ; i < keys.size() ; ++i) {
                if (depth[i] >= _cap)
                    continue;
                auto current = keys[i];
                for (int w : _g.neighborhood(current.cur).members()) {
                    auto next = step(current, w);
                    auto [it, fresh] = id.emplace(next, static_cast<int>(keys.size()));
                    if (fresh) {
                        keys.push_back(std::move(next));
                        depth.push_back(depth[i] + 1);
                        preds.emplace_back();
                        if (++states > _budget) {
                            truncated = true;
                            return;
                        }
                    }
                    preds[it->second].push_back(static_cast<int>(i));
                }
            }

            // distance back to the start key along forward edges
            vector<int> back(keys.size(), -1);
            std::deque<int> queue{ 0 };
            back[0] = 0;
            while (! queue.empty()) {
                int k = queue.front();
                queue.pop_front();
                for (int p : preds[k])
                    if (back[p] < 0) {
                        back[p] = back[k] + 1;
                        queue.push_back(p);
                    }
            }
            for (std::size_t k = 1 ; k < keys.size() ; ++k)
                if (back[k] >= 0 && depth[k] + back[k] <= _cap)
                    visit(keys[k].pos, keys[k].cur);
        }
    };
}

auto warmthkit::two_stable_witness_search(const Graph & g, const EvenClosedWalk & gamma, optional<int> walk_cap) -> TwoStableSearch
{
    validate_walk(g, gamma);
    int len = gamma.length();
    int n = gamma.half_length();
    int cap = walk_cap.value_or(6 * len);
    if (cap < len)
        throw InputError("walk cap is shorter than the walk");

    auto complex = build_hom_k2(g, 2);
    H1Coordinates coords(complex);
    auto x = coords.of_chain(cycle_chain(complex, gamma));
    if (std::all_of(x.begin(), x.end(), [] (uint64_t v) { return v == 0; }))
        throw InputError("walk has finite order in H_1; the construction needs an infinite-order class");

    TwoStableSearch result;
    result.a_sets.assign(n, VertexSet(g.size()));
    result.b_sets.assign(n, VertexSet(g.size()));
    auto place = [&] (int pos, int v) {
        if (pos % 2 == 0)
            result.a_sets[pos / 2].set(v);
        else
            result.b_sets[((pos + 1) / 2) % n].set(v);
    };
    for (int pos = 0 ; pos < len ; ++pos)
        place(pos, gamma.vertices[pos]);

    Forcing forcing(g, complex, coords, gamma, x, cap);
    for (int pos = 0 ; pos < len && ! forcing.truncated ; ++pos)
        for (int last : g.neighborhood(gamma.vertices[pos]).members()) {
            forcing.run(pos, last, place);
            if (forcing.truncated)
                break;
        }
    result.states = forcing.states;
    result.truncated = forcing.truncated;

    // b_i sits between a_{i-1} and a_i, and a_i between b_i and b_{i+1}
    auto fail = [&] (std::string why) {
        result.reason = std::move(why);
        return result;
    };
    for (int i = 0 ; i < n ; ++i) {
        if (result.a_sets[i].is_full() || result.b_sets[i].is_full())
            return fail("a forced set is all of V");
        auto b = g.neighborhood(result.a_sets[(i + n - 1) % n]) & g.neighborhood(result.a_sets[i]);
        if (b != result.b_sets[i])
            return fail("N(A_" + std::to_string((i + n - 1) % n) + ") & N(A_" + std::to_string(i) + ") = "
                    + b.to_string() + " but B_" + std::to_string(i) + " = " + result.b_sets[i].to_string());
        auto a = g.neighborhood(result.b_sets[i]) & g.neighborhood(result.b_sets[(i + 1) % n]);
        if (a != result.a_sets[i])
            return fail("N(B_" + std::to_string(i) + ") & N(B_" + std::to_string((i + 1) % n) + ") = "
                    + a.to_string() + " but A_" + std::to_string(i) + " = " + result.a_sets[i].to_string());
    }

    std::map<VertexSet, int> index;
    StableFamily family;
    family.d = 2;
    auto member = [&] (const VertexSet & s) {
        auto [it, fresh] = index.emplace(s, static_cast<int>(family.members.size()));
        if (fresh) {
            family.members.push_back(s);
            family.witnesses.emplace_back();
        }
        return it->second;
    };
    for (int i = 0 ; i < n ; ++i) {
        int ai = member(result.a_sets[i]);
        int bi = member(result.b_sets[i]);
        if (family.witnesses[bi].empty())
            family.witnesses[bi] = { member(result.a_sets[(i + n - 1) % n]), member(result.a_sets[i]) };
        if (family.witnesses[ai].empty())
            family.witnesses[ai] = { member(result.b_sets[i]), member(result.b_sets[(i + 1) % n]) };
    }
    auto defect = stable_family_defect(g, family);
    if (! defect.empty())
        return fail("assembled family failed verification: " + defect);
    result.family = std::move(family);
    result.status = TwoStableSearch::Status::found;
    return result;
}
