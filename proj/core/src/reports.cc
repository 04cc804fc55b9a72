#include <warmthkit/experiments.hh>
#include <warmthkit/errors.hh>

#include <json.hpp>

#include <sstream>

using namespace warmthkit;

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

auto warmthkit::to_string(Verdict v) -> string
{
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::consistent_with_caveat: return "consistent-with-caveat";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "unknown";
}

auto InvariantReport::verdicts() const -> vector<std::pair<string, Verdict>>
{
    return { { "warmth_vs_hconn", warmth_vs_hconn }, { "free_h1", free_h1 }, { "kab_free", kab_free },
        { "warmth_vs_chi", warmth_vs_chi }, { "hconn_vs_chi", hconn_vs_chi } };
}

auto InvariantReport::any_violation() const -> bool
{
    for (auto & [name, v] : verdicts())
        if (v == Verdict::violated)
            return true;
    return false;
}

auto InvariantReport::any_inconclusive() const -> bool
{
    for (auto & [name, v] : verdicts())
        if (v == Verdict::inconclusive)
            return true;
    return false;
}

namespace
{
    // warmth <= bound, given the warmth interval
    auto at_most(const WarmthResult & w, int bound) -> Verdict
    {
        if (w.hi && *w.hi <= bound && ! w.infinite)
            return Verdict::consistent;
        if (w.infinite || w.lo > bound)
            return Verdict::violated;
        return Verdict::inconclusive;
    }

    auto combine(const vector<Verdict> & parts) -> Verdict
    {
        bool inconclusive = false, consistent = false, caveat = false;
        for (auto v : parts) {
            if (v == Verdict::violated)
                return v;
            inconclusive |= v == Verdict::inconclusive;
            consistent |= v == Verdict::consistent;
            caveat |= v == Verdict::consistent_with_caveat;
        }
        if (inconclusive)
            return Verdict::inconclusive;
        if (caveat)
            return Verdict::consistent_with_caveat;
        return consistent ? Verdict::consistent : Verdict::not_applicable;
    }

    auto check_warmth_vs_chi(const InvariantReport & r) -> Verdict
    {
        if (! r.warmth)
            return Verdict::inconclusive;
        auto & w = *r.warmth;
        auto & chi = r.chromatic;
        if (chi.infinite)
            return Verdict::consistent;
        if (w.infinite || w.lo > chi.hi)
            return Verdict::violated;
        if (w.hi && *w.hi <= chi.lo)
            return Verdict::consistent;
        return Verdict::inconclusive;
    }

    auto check_hconn_vs_chi(const InvariantReport & r) -> Verdict
    {
        if (! r.connectivity)
            return Verdict::inconclusive;
        auto & c = *r.connectivity;
        auto & chi = r.chromatic;
        if (chi.infinite)
            return Verdict::consistent;
        // the homological value can only overstate the true connectivity, so a pass is safe
        if (! c.infinite && ! c.truncated && c.value + 3 <= chi.lo)
            return Verdict::consistent;
        if (c.infinite || c.value + 3 > chi.hi)
            return (c.caveat || c.truncated) ? Verdict::inconclusive : Verdict::violated;
        return Verdict::inconclusive;
    }

    auto check_warmth_vs_hconn(const InvariantReport & r) -> Verdict
    {
        if (! r.warmth || ! r.warmth->exact() || ! r.connectivity)
            return Verdict::inconclusive;
        auto & w = *r.warmth;
        auto & c = *r.connectivity;
        bool passes = c.infinite || (! w.infinite && *w.hi <= c.value + 3);
        if (passes)
            return c.caveat ? Verdict::consistent_with_caveat : Verdict::consistent;
        if (c.caveat || c.truncated)
            return Verdict::inconclusive;
        return Verdict::violated;
    }

    auto check_free_h1(InvariantReport & r) -> Verdict
    {
        if (! r.homology || r.homology->computed_dim() < 1) {
            if (r.homology && r.homology->top_dim < 1)
                return Verdict::not_applicable;
            return Verdict::inconclusive;
        }
        auto & h = *r.homology;
        if (h.betti[1] == 0) {
            if (! h.torsion[1].empty() && r.warmth && r.warmth->lo > 3)
                r.notes.push_back("noteworthy: H_1 is pure torsion and warmth exceeds 3");
            return Verdict::not_applicable;
        }
        if (! r.warmth)
            return Verdict::inconclusive;
        return at_most(*r.warmth, 3);
    }

    auto check_kab_free(InvariantReport & r, const Graph & g, const ReportOptions & options) -> Verdict
    {
        if (! g.loop_free()) {
            // looped graphs can be K_{a,b}-free and still dismantlable, e.g. a looped path
            return Verdict::not_applicable;
        }
        vector<Verdict> parts;
        for (auto [a, b] : options.bipartite_sizes) {
            BipartiteCheck check{ a, b, find_complete_bipartite(g, a, b).has_value(), Verdict::not_applicable };
            if (! check.contains)
                check.verdict = r.warmth ? at_most(*r.warmth, a + b - 1) : Verdict::inconclusive;
            parts.push_back(check.verdict);
            r.bipartite.push_back(check);
        }
        return combine(parts);
    }
}

auto warmthkit::run_conjecture_check(const Graph & g, const Provenance & provenance, const ReportOptions & options)
        -> InvariantReport
{
    if (g.edge_count() == 0)
        throw InputError("conjecture check needs a graph with at least one edge");

    InvariantReport r;
    r.id = canonical_hash_hex(g);
    r.provenance = provenance;
    r.n = g.size();
    r.edges = g.edge_count();
    r.loops = g.loop_count();

    r.chromatic = chromatic_number(g, options.chromatic_budget);
    if (! r.chromatic.infinite && ! r.chromatic.exact)
        r.notes.push_back("chromatic number: budget exhausted, interval only");

    auto wopts = options.warmth;
    wopts.chromatic_budget = options.chromatic_budget;
    try {
        r.warmth = warmth(g, wopts);
    }
    catch (const CapacityError & e) {
        if (options.heuristic_fallback && wopts.mode == WarmthMode::exact) {
            wopts.mode = WarmthMode::heuristic;
            r.notes.push_back("warmth: graph above the exact cap, heuristic mode used");
            try {
                r.warmth = warmth(g, wopts);
            }
            catch (const CapacityError & e2) {
                r.warmth_error = e2.what();
            }
        }
        else
            r.warmth_error = e.what();
    }
    if (r.warmth && r.warmth->budget_exhausted)
        r.notes.push_back("warmth: budget exhausted, interval only");

    try {
        auto complex = build_hom_k2(g, options.homology_dim + 1);
        r.homology = homology(complex, std::min(options.homology_dim, complex.top_dim()));
        r.connectivity = homological_connectivity(*r.homology);
    }
    catch (const CapacityError & e) {
        r.homology_error = e.what();
        // fall back to the lazy computation, which stops at the first nonzero group
        try {
            r.connectivity = hom_connectivity(g, options.homology_dim);
            auto low = build_hom_k2(g, 2);
            r.homology = homology(low, std::min(1, low.top_dim()));
        }
        catch (const CapacityError &) {
        }
    }

    r.warmth_vs_chi = check_warmth_vs_chi(r);
    r.hconn_vs_chi = check_hconn_vs_chi(r);
    r.warmth_vs_hconn = check_warmth_vs_hconn(r);
    r.free_h1 = check_free_h1(r);
    r.kab_free = check_kab_free(r, g, options);
    if (r.warmth_vs_hconn == Verdict::violated)
        r.notes.push_back("WARMTH BOUND VIOLATION CANDIDATE: warmth exceeds homological connectivity + 3 with the caveat clear");
    if (r.hconn_vs_chi == Verdict::violated || r.warmth_vs_chi == Verdict::violated || r.free_h1 == Verdict::violated
            || r.kab_free == Verdict::violated)
        r.notes.push_back("a proven bound failed; this indicates a bug");
    return r;
}

namespace
{
    auto family_json(const StableFamily & f, const vector<int> & vertices) -> json
    {
        json out{ { "d", f.d }, { "size", f.size() }, { "vertices", vertices } };
        if (f.size() <= 256) {
            json members = json::array();
            for (std::size_t i = 0 ; i < f.size() ; ++i)
                members.push_back({ { "set", f.members[i].members() }, { "witnesses", f.witnesses[i] } });
            out["members"] = members;
        }
        return out;
    }

    auto warmth_json(const InvariantReport & r) -> json
    {
        if (! r.warmth)
            return { { "status", "error" }, { "error", r.warmth_error } };
        auto & w = *r.warmth;
        json out{
            { "status", "ok" },
            { "value", w.infinite ? json("inf") : (w.exact() ? json(*w.hi) : json(nullptr)) },
            { "lo", w.lo },
            { "hi", w.infinite ? json("inf") : (w.hi ? json(*w.hi) : json(nullptr)) },
            { "exact", w.exact() },
            { "infinite", w.infinite },
            { "mode", to_string(w.mode) },
            { "method", w.method },
            { "budget_exhausted", w.budget_exhausted },
        };
        if (w.certificate)
            out["certificate"] = family_json(*w.certificate, w.certificate_vertices);
        return out;
    }

    auto homology_json(const InvariantReport & r) -> json
    {
        json out;
        if (r.homology) {
            auto & h = *r.homology;
            out = { { "status", r.homology_error.empty() ? "ok" : "partial" }, { "betti", h.betti }, { "torsion", h.torsion },
                { "f_vector", h.f_vector }, { "top_dim", h.top_dim }, { "truncated", h.truncated } };
        }
        else
            out = { { "status", "error" } };
        if (! r.homology_error.empty())
            out["error"] = r.homology_error;
        return out;
    }

    auto connectivity_json(const InvariantReport & r) -> json
    {
        if (! r.connectivity)
            return { { "status", "error" } };
        auto & c = *r.connectivity;
        return { { "status", "ok" }, { "value", c.infinite ? json("inf") : json(c.value) }, { "infinite", c.infinite },
            { "truncated", c.truncated }, { "caveat", c.caveat }, { "mode", "homological" } };
    }

    auto chromatic_json(const ChromaticResult & chi) -> json
    {
        return { { "value", chi.infinite ? json("inf") : (chi.exact ? json(chi.hi) : json(nullptr)) },
            { "lo", chi.infinite ? json("inf") : json(chi.lo) }, { "hi", chi.infinite ? json("inf") : json(chi.hi) },
            { "exact", chi.exact || chi.infinite }, { "infinite", chi.infinite } };
    }

    auto report_to_json(const InvariantReport & r) -> json
    {
        json prov{ { "generator", r.provenance.generator }, { "params", r.provenance.params },
            { "seed", r.provenance.seed ? json(*r.provenance.seed) : json(nullptr) } };
        json checks;
        for (auto & [name, v] : r.verdicts())
            checks[name] = to_string(v);
        json bip = json::array();
        for (auto & b : r.bipartite)
            bip.push_back({ { "a", b.a }, { "b", b.b }, { "contains", b.contains }, { "verdict", to_string(b.verdict) } });
        return {
            { "schema", report_schema },
            { "id", r.id },
            { "provenance", prov },
            { "n", r.n },
            { "edges", r.edges },
            { "loops", r.loops },
            { "warmth", warmth_json(r) },
            { "homology", homology_json(r) },
            { "connectivity", connectivity_json(r) },
            { "chromatic", chromatic_json(r.chromatic) },
            { "checks", checks },
            { "complete_bipartite", bip },
            { "notes", r.notes },
        };
    }

    auto csv_escape(const string & s) -> string
    {
        if (s.find_first_of(",\"\n") == string::npos)
            return s;
        string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }

    template <typename T>
    auto joined(const vector<T> & xs, const char * sep) -> string
    {
        std::ostringstream out;
        for (std::size_t i = 0 ; i < xs.size() ; ++i)
            out << (i ? sep : "") << xs[i];
        return out.str();
    }
}

auto warmthkit::report_json(const InvariantReport & report, int indent) -> string
{
    return report_to_json(report).dump(indent);
}

auto warmthkit::report_csv_header() -> string
{
    return "id,generator,params,seed,n,edges,loops,warmth,warmth_lo,warmth_hi,warmth_mode,warmth_method,"
           "b0,b1,betti,torsion,homology_truncated,hconn,hconn_caveat,hconn_truncated,chi,chi_lo,chi_hi,"
           "warmth_vs_hconn,free_h1,kab_free,warmth_vs_chi,hconn_vs_chi";
}

auto warmthkit::report_csv_row(const InvariantReport & r) -> string
{
    vector<string> cells;
    cells.push_back(r.id);
    cells.push_back(csv_escape(r.provenance.generator));
    cells.push_back(csv_escape(r.provenance.params));
    cells.push_back(r.provenance.seed ? std::to_string(*r.provenance.seed) : "");
    cells.push_back(std::to_string(r.n));
    cells.push_back(std::to_string(r.edges));
    cells.push_back(std::to_string(r.loops));
    if (r.warmth) {
        auto & w = *r.warmth;
        cells.push_back(w.exact() ? (w.infinite ? "inf" : std::to_string(*w.hi)) : "");
        cells.push_back(std::to_string(w.lo));
        cells.push_back(w.infinite ? "inf" : (w.hi ? std::to_string(*w.hi) : ""));
        cells.push_back(to_string(w.mode));
        cells.push_back(w.method);
    }
    else
        cells.insert(cells.end(), { "", "", "", "", "error" });
    if (r.homology) {
        auto & h = *r.homology;
        cells.push_back(std::to_string(h.betti[0]));
        cells.push_back(h.computed_dim() >= 1 ? std::to_string(h.betti[1]) : "");
        cells.push_back(joined(h.betti, " "));
        vector<string> torsion;
        for (auto & t : h.torsion)
            torsion.push_back(t.empty() ? "0" : joined(t, "x"));
        cells.push_back(joined(torsion, " "));
        cells.push_back(h.truncated ? "1" : "0");
    }
    else
        cells.insert(cells.end(), { "", "", "", "", "" });
    if (r.connectivity) {
        auto & c = *r.connectivity;
        cells.push_back(c.infinite ? "inf" : std::to_string(c.value));
        cells.push_back(c.caveat ? "1" : "0");
        cells.push_back(c.truncated ? "1" : "0");
    }
    else
        cells.insert(cells.end(), { "", "", "" });
    auto & chi = r.chromatic;
    cells.push_back(chi.infinite ? "inf" : (chi.exact ? std::to_string(chi.hi) : ""));
    cells.push_back(chi.infinite ? "inf" : std::to_string(chi.lo));
    cells.push_back(chi.infinite ? "inf" : std::to_string(chi.hi));
    for (auto & [name, v] : r.verdicts())
        cells.push_back(to_string(v));
    return joined(cells, ",");
}
