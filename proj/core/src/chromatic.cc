#include <warmthkit/chromatic.hh>

#include <algorithm>

using namespace warmthkit;

using std::vector;

auto Coloring::proper_for(const Graph & g) const -> bool
{
    if (static_cast<int>(colors.size()) != g.size())
        return false;
    for (int c : colors)
        if (c < 0 || c >= k)
            return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v])
            return false;
    return true;
}

auto warmthkit::greedy_clique(const Graph & g) -> vector<int>
{
    vector<int> best;
    for (int start = 0 ; start < g.size() ; ++start) {
        vector<int> clique{ start };
        auto candidates = g.neighborhood(start);
        candidates.reset(start);
        while (! candidates.empty()) {
            // pick the candidate keeping the most other candidates alive
            int pick = -1, pick_score = -1;
            candidates.for_each([&] (int v) {
                int score = (candidates & g.neighborhood(v)).count();
                if (score > pick_score) {
                    pick = v;
                    pick_score = score;
                }
            });
            clique.push_back(pick);
            candidates &= g.neighborhood(pick);
            candidates.reset(pick);
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    return best;
}

namespace
{
    class DsaturSearch
    {
    private:
        const Graph & _g;
        int _n;
        vector<vector<int>> _adj;
        vector<int> _color;
        // _seen[v * _n + c]: number of coloured neighbours of v with colour c
        vector<int> _seen;
        vector<int> _saturation;
        int _lower;
        std::chrono::steady_clock::time_point _deadline;

    public:
        vector<int> best_colors;
        int best = 0;
        long long nodes = 0;
        bool timed_out = false;

        DsaturSearch(const Graph & g, int lower, std::chrono::milliseconds budget) :
            _g(g),
            _n(g.size()),
            _adj(g.size()),
            _color(g.size(), -1),
            _seen(static_cast<std::size_t>(g.size()) * g.size(), 0),
            _saturation(g.size(), 0),
            _lower(lower),
            _deadline(std::chrono::steady_clock::now() + budget)
        {
            for (int v = 0 ; v < _n ; ++v)
                _adj[v] = g.neighborhood(v).members();
            best = _n + 1;
        }

        auto assign(int v, int c) -> void
        {
            _color[v] = c;
            for (int w : _adj[v])
                if (_seen[w * _n + c]++ == 0)
                    ++_saturation[w];
        }

        auto unassign(int v) -> void
        {
            int c = _color[v];
            for (int w : _adj[v])
                if (--_seen[w * _n + c] == 0)
                    --_saturation[w];
            _color[v] = -1;
        }

        auto pick() const -> int
        {
            int choice = -1;
            for (int v = 0 ; v < _n ; ++v) {
                if (_color[v] != -1)
                    continue;
                if (choice == -1 || _saturation[v] > _saturation[choice]
                        || (_saturation[v] == _saturation[choice] && _adj[v].size() > _adj[choice].size()))
                    choice = v;
            }
            return choice;
        }

        auto search(int coloured, int used) -> void
        {
            if (timed_out || best == _lower)
                return;
            if ((++nodes & 1023) == 0 && std::chrono::steady_clock::now() > _deadline) {
                timed_out = true;
                return;
            }
            if (coloured == _n) {
                if (used < best) {
                    best = used;
                    best_colors = _color;
                }
                return;
            }
            int v = pick();
            // a fresh colour is only worth trying if it still beats the incumbent
            int limit = std::min(used + 1, best - 1);
            for (int c = 0 ; c < limit ; ++c) {
                if (_seen[v * _n + c])
                    continue;
                assign(v, c);
                search(coloured + 1, std::max(used, c + 1));
                unassign(v);
                if (timed_out || best == _lower)
                    return;
            }
        }
    };
}

auto warmthkit::chromatic_number(const Graph & g, std::chrono::milliseconds budget) -> ChromaticResult
{
    ChromaticResult result;
    if (! g.loop_free()) {
        result.infinite = true;
        result.exact = true;
        return result;
    }

    int lower = static_cast<int>(greedy_clique(g).size());
    DsaturSearch search(g, lower, budget);
    search.search(0, 0);

    result.nodes = search.nodes;
    result.lo = lower;
    if (search.best_colors.empty()) {
        Coloring identity{ vector<int>(g.size()), g.size() };
        for (int v = 0 ; v < g.size() ; ++v)
            identity.colors[v] = v;
        result.witness = identity;
        result.hi = g.size();
    }
    else {
        result.witness = Coloring{ search.best_colors, search.best };
        result.hi = search.best;
    }
    if (! search.timed_out)
        result.lo = result.hi;
    result.exact = result.lo == result.hi;
    return result;
}
