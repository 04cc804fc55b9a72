#include <warmthkit/experiments.hh>
#include <warmthkit/errors.hh>
#include <warmthkit/generators.hh>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

using namespace warmthkit;

using nlohmann::json;
using std::string;
using std::uint64_t;
using std::vector;

auto warmthkit::parse_random_model(const string & name) -> RandomModel
{
    if (name == "gnp" || name == "erdos-renyi" || name == "er")
        return RandomModel::gnp;
    if (name == "chung-lu" || name == "chung_lu" || name == "cl")
        return RandomModel::chung_lu;
    throw InputError("unknown random model '" + name + "' (expected gnp or chung-lu)");
}

auto warmthkit::to_string(RandomModel model) -> string
{
    return model == RandomModel::gnp ? "gnp" : "chung-lu";
}

auto warmthkit::trial_seed(uint64_t seed, int n, int trial) -> uint64_t
{
    // splitmix64 over the three inputs
    auto mix = [] (uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ static_cast<uint64_t>(n)) ^ static_cast<uint64_t>(trial));
}

auto warmthkit::sweep_graph(const SweepSpec & spec, int n, uint64_t seed) -> Graph
{
    if (n < 2)
        throw InputError("sweep sizes must be at least 2");
    if (spec.model == RandomModel::gnp) {
        double p = spec.alpha ? std::pow(static_cast<double>(n), -*spec.alpha) : spec.p;
        return erdos_renyi(n, p, seed);
    }
    if (spec.beta <= 2)
        throw InputError("Chung-Lu exponent beta must exceed 2");
    if (spec.average_degree <= 0)
        throw InputError("Chung-Lu average degree must be positive");
    // power-law weights scaled to the target average, then clipped so that w_i^2 <= sum w
    DegreeSequence w;
    double exponent = -1.0 / (spec.beta - 1.0);
    double total = 0;
    for (int i = 0 ; i < n ; ++i) {
        w.w.push_back(std::pow(i + 1.0, exponent));
        total += w.w.back();
    }
    double scale = spec.average_degree * n / total;
    for (auto & x : w.w)
        x *= scale;
    // largest c with c^2 <= sum min(w_i, c); the slack is concave in c so bisection finds it
    auto slack = [&](double c) {
        double sum = 0;
        for (auto x : w.w)
            sum += std::min(x, c);
        return sum - c * c;
    };
    double lo = 0, hi = std::min(*std::max_element(w.w.begin(), w.w.end()), n - 1.0);
    if (slack(hi) >= 0)
        lo = hi;
    else
        for (int step = 0 ; step < 100 ; ++step) {
            double mid = (lo + hi) / 2;
            (slack(mid) >= 0 ? lo : hi) = mid;
        }
    for (auto & x : w.w)
        x = std::min(x, lo);
    return chung_lu(w, seed);
}

auto warmthkit::run_random_sweep(const SweepSpec & spec) -> SweepReport
{
    if (spec.trials < 1)
        throw InputError("sweep needs at least one trial");
    if (spec.sizes.empty())
        throw InputError("sweep needs at least one size");

    SweepReport out;
    out.spec = spec;
    for (int n : spec.sizes)
        for (int t = 0 ; t < spec.trials ; ++t)
            out.trials.push_back({ n, t, trial_seed(spec.seed, n, t), {} });

    vector<string> errors(out.trials.size());
    std::atomic<std::size_t> next{ 0 };
    auto worker = [&] {
        for (std::size_t i ; (i = next++) < out.trials.size() ; ) {
            auto & trial = out.trials[i];
            try {
                auto g = sweep_graph(spec, trial.n, trial.seed);
                std::ostringstream params;
                params << "n=" << trial.n;
                if (spec.model == RandomModel::gnp)
                    params << (spec.alpha ? ",alpha=" + std::to_string(*spec.alpha) : ",p=" + std::to_string(spec.p));
                else
                    params << ",avg=" << spec.average_degree << ",beta=" << spec.beta;
                Provenance prov{ to_string(spec.model), params.str(), trial.seed };
                if (g.edge_count() == 0) {
                    trial.report.provenance = prov;
                    trial.report.n = g.size();
                    trial.report.notes.push_back("edgeless sample: warmth undefined");
                    continue;
                }
                trial.report = run_conjecture_check(g, prov, spec.report);
            }
            catch (const std::exception & e) {
                errors[i] = e.what();
            }
        }
    };
    int threads = std::max(1, spec.threads);
    vector<std::thread> pool;
    for (int t = 1 ; t < threads ; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();
    for (auto & e : errors)
        if (! e.empty())
            throw InputError("sweep trial failed: " + e);

    for (int n : spec.sizes) {
        SweepAggregate a;
        a.n = n;
        long long wsum = 0, csum = 0;
        for (auto & trial : out.trials) {
            if (trial.n != n)
                continue;
            ++a.trials;
            auto & r = trial.report;
            if (r.warmth && r.warmth->exact() && ! r.warmth->infinite) {
                int v = *r.warmth->hi;
                a.warmth_min = a.warmth_count ? std::min(a.warmth_min, v) : v;
                a.warmth_max = a.warmth_count ? std::max(a.warmth_max, v) : v;
                ++a.warmth_count;
                wsum += v;
            }
            if (r.connectivity && ! r.connectivity->infinite && ! r.connectivity->truncated) {
                int v = r.connectivity->value;
                a.hconn_min = a.hconn_count ? std::min(a.hconn_min, v) : v;
                a.hconn_max = a.hconn_count ? std::max(a.hconn_max, v) : v;
                ++a.hconn_count;
                csum += v;
            }
        }
        if (a.warmth_count)
            a.warmth_mean = static_cast<double>(wsum) / a.warmth_count;
        if (a.hconn_count)
            a.hconn_mean = static_cast<double>(csum) / a.hconn_count;
        out.aggregates.push_back(a);
    }
    return out;
}

auto warmthkit::sweep_csv(const SweepReport & sweep) -> string
{
    std::ostringstream out;
    out << "n,trial,trial_seed," << report_csv_header() << "\n";
    for (auto & t : sweep.trials)
        out << t.n << "," << t.trial << "," << t.seed << "," << report_csv_row(t.report) << "\n";
    return out.str();
}

namespace
{
    auto fixed(double x) -> string
    {
        std::ostringstream out;
        out.setf(std::ios::fixed);
        out.precision(4);
        out << x;
        return out.str();
    }
}

auto warmthkit::sweep_aggregate_csv(const SweepReport & sweep) -> string
{
    std::ostringstream out;
    out << "n,trials,warmth_count,warmth_mean,warmth_min,warmth_max,hconn_count,hconn_mean,hconn_min,hconn_max\n";
    for (auto & a : sweep.aggregates)
        out << a.n << "," << a.trials << "," << a.warmth_count << "," << fixed(a.warmth_mean) << "," << a.warmth_min << ","
            << a.warmth_max << "," << a.hconn_count << "," << fixed(a.hconn_mean) << "," << a.hconn_min << ","
            << a.hconn_max << "\n";
    return out.str();
}

auto warmthkit::sweep_json(const SweepReport & sweep, int indent) -> string
{
    auto & s = sweep.spec;
    json spec{ { "model", to_string(s.model) }, { "sizes", s.sizes }, { "trials", s.trials }, { "seed", s.seed } };
    if (s.model == RandomModel::gnp) {
        if (s.alpha)
            spec["alpha"] = *s.alpha;
        else
            spec["p"] = s.p;
    }
    else {
        spec["average_degree"] = s.average_degree;
        spec["beta"] = s.beta;
    }
    json aggregates = json::array();
    for (auto & a : sweep.aggregates)
        aggregates.push_back({ { "n", a.n }, { "trials", a.trials }, { "warmth_count", a.warmth_count },
            { "warmth_mean", a.warmth_mean }, { "warmth_min", a.warmth_min }, { "warmth_max", a.warmth_max },
            { "hconn_count", a.hconn_count }, { "hconn_mean", a.hconn_mean }, { "hconn_min", a.hconn_min },
            { "hconn_max", a.hconn_max } });
    json trials = json::array();
    for (auto & t : sweep.trials)
        trials.push_back({ { "n", t.n }, { "trial", t.trial }, { "seed", t.seed },
            { "report", json::parse(report_json(t.report)) } });
    json out{ { "schema", sweep_schema }, { "spec", spec }, { "aggregates", aggregates }, { "trials", trials } };
    return out.dump(indent);
}
