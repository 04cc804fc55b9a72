#include <warmthkit/folding.hh>

using namespace warmthkit;

using std::optional;
using std::vector;

namespace
{
    // Works on the full-size adjacency with an alive mask, so original indices are kept.
    auto find_fold_among(const Graph & g, const VertexSet & alive) -> optional<Fold>
    {
        for (int v = alive.first() ; v != -1 ; v = alive.next(v)) {
            auto nv = g.neighborhood(v) & alive;
            for (int w = alive.first() ; w != -1 ; w = alive.next(w)) {
                if (w == v)
                    continue;
                if (nv.is_subset_of(g.neighborhood(w)))
                    return Fold{ v, w };
            }
        }
        return std::nullopt;
    }
}

auto warmthkit::find_fold(const Graph & g) -> optional<Fold>
{
    return find_fold_among(g, g.all_vertices());
}

auto warmthkit::is_stiff(const Graph & g) -> bool
{
    return ! find_fold(g);
}

auto warmthkit::stiff_reduction(const Graph & g) -> StiffReduction
{
    auto alive = g.all_vertices();
    FoldSequence folds;
    while (alive.count() > 1) {
        auto fold = find_fold_among(g, alive);
        if (! fold)
            break;
        folds.steps.push_back(*fold);
        alive.reset(fold->removed);
    }
    auto keep = alive.members();
    return StiffReduction{ g.induced_subgraph(keep), std::move(folds), keep };
}

auto warmthkit::is_dismantlable(const Graph & g) -> bool
{
    auto residue = stiff_reduction(g);
    return residue.graph.size() == 1 && residue.graph.has_loop(0);
}

auto warmthkit::valid_fold_sequence(const Graph & g, const FoldSequence & folds) -> bool
{
    auto alive = g.all_vertices();
    for (auto & step : folds.steps) {
        if (step.removed == step.absorber)
            return false;
        if (step.removed < 0 || step.removed >= g.size() || step.absorber < 0 || step.absorber >= g.size())
            return false;
        if (! alive.test(step.removed) || ! alive.test(step.absorber))
            return false;
        if (! (g.neighborhood(step.removed) & alive).is_subset_of(g.neighborhood(step.absorber)))
            return false;
        alive.reset(step.removed);
    }
    return true;
}
