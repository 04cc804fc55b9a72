#include <warmthkit/homology.hh>
#include <warmthkit/errors.hh>

#include <algorithm>

using namespace warmthkit;

using std::optional;
using std::vector;

auto HomologySummary::reduced_zero(int k) const -> bool
{
    if (k == 0)
        return betti[0] <= 1;
    return betti[k] == 0 && torsion[k].empty();
}

auto warmthkit::homology(const CellComplex & c, optional<int> max_dim) -> HomologySummary
{
    int top = c.top_dim();
    int wanted = max_dim ? *max_dim : std::min(top, default_homology_dim);
    if (wanted < 0)
        throw InputError("max_dim must be nonnegative");
    wanted = std::min(wanted, top);
    // H_k needs the boundary out of dimension k + 1, unless k is the top dimension
    int reachable = c.complete() ? top : c.built_dim() - 1;
    int dim = std::min(wanted, reachable);
    if (dim < 0)
        throw InputError("complex has too few dimensions built for homology");

    vector<long long> rank(dim + 3, 0);
    vector<vector<std::int64_t>> torsion_of(dim + 3);
    for (int k = 1 ; k <= dim + 1 && k <= c.built_dim() ; ++k) {
        auto snf = smith_summary(c.boundary(k));
        rank[k] = snf.rank;
        torsion_of[k] = std::move(snf.torsion);
    }

    HomologySummary result;
    result.top_dim = top;
    result.f_vector = c.f_vector();
    result.truncated = dim < top;
    for (int k = 0 ; k <= dim ; ++k) {
        result.betti.push_back(c.cell_count(k) - rank[k] - rank[k + 1]);
        result.torsion.push_back(torsion_of[k + 1]);
    }
    return result;
}

auto warmthkit::hom_homology(const Graph & g, optional<int> max_dim) -> HomologySummary
{
    int dim = max_dim ? *max_dim : default_homology_dim;
    auto complex = build_hom_k2(g, dim + 1);
    return homology(complex, std::min(dim, complex.top_dim()));
}

auto warmthkit::homological_connectivity(const HomologySummary & h) -> Connectivity
{
    if (h.betti.empty() || h.betti[0] == 0)
        throw InputError("connectivity of an empty complex");
    Connectivity result;
    if (h.betti[0] > 1) {
        result.value = -1;
        return result;
    }
    for (int k = 1 ; k <= h.computed_dim() ; ++k)
        if (! h.reduced_zero(k)) {
            result.value = k - 1;
            result.caveat = result.value >= 1;
            return result;
        }
    result.value = h.computed_dim();
    result.infinite = ! h.truncated;
    result.truncated = h.truncated;
    result.caveat = result.infinite || result.value >= 1;
    return result;
}

auto warmthkit::hom_connectivity(const Graph & g, int max_dim) -> Connectivity
{
    auto complex = build_hom_k2(g, max_dim + 1);
    int top = complex.top_dim();
    int dim = std::min(max_dim, top);

    // grow the summary one dimension at a time so high boundaries are skipped when not needed
    HomologySummary h;
    h.top_dim = top;
    h.f_vector = complex.f_vector();
    long long previous_rank = 0;
    for (int k = 0 ; k <= dim ; ++k) {
        long long next_rank = 0;
        vector<std::int64_t> torsion;
        if (k + 1 <= complex.built_dim()) {
            auto snf = smith_summary(complex.boundary(k + 1));
            next_rank = snf.rank;
            torsion = std::move(snf.torsion);
        }
        h.betti.push_back(complex.cell_count(k) - previous_rank - next_rank);
        h.torsion.push_back(std::move(torsion));
        previous_rank = next_rank;
        if (! h.reduced_zero(k))
            break;
    }
    h.truncated = h.computed_dim() < top;
    return homological_connectivity(h);
}

auto warmthkit::h1_free_rank(const HomologySummary & h) -> long long
{
    if (h.top_dim < 1)
        return 0;
    if (h.computed_dim() < 1)
        throw InputError("H_1 was not computed");
    return h.betti[1];
}

auto warmthkit::euler_characteristic_matches(const HomologySummary & h) -> optional<bool>
{
    if (h.truncated || static_cast<int>(h.f_vector.size()) <= h.top_dim)
        return std::nullopt;
    long long cells = 0, bettis = 0;
    for (int k = 0 ; k <= h.top_dim ; ++k) {
        cells += (k % 2 == 0 ? 1 : -1) * h.f_vector[k];
        bettis += (k % 2 == 0 ? 1 : -1) * h.betti[k];
    }
    return cells == bettis;
}
