#include <warmthkit/graph_io.hh>
#include <warmthkit/errors.hh>

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

using namespace warmthkit;

using std::string;
using std::vector;

namespace
{
    auto strip(const string & s) -> string
    {
        auto start = s.find_first_not_of(" \t\r");
        if (start == string::npos)
            return "";
        auto end = s.find_last_not_of(" \t\r");
        return s.substr(start, end - start + 1);
    }

    auto parse_int(std::istringstream & in, int line, const char * what) -> long long
    {
        long long value;
        if (! (in >> value))
            throw ParseError(line, string("expected ") + what);
        return value;
    }

    auto expect_end(std::istringstream & in, int line) -> void
    {
        string rest;
        if (in >> rest)
            throw ParseError(line, "unexpected trailing text '" + rest + "'");
    }

    auto checked_vertex(long long v, long long n, int line) -> int
    {
        if (v < 0 || v >= n)
            throw RangeError("line " + std::to_string(line) + ": vertex " + std::to_string(v)
                    + " out of range for " + std::to_string(n) + " vertices");
        return static_cast<int>(v);
    }

    auto make_graph(long long n, int line) -> Graph
    {
        if (n < 1)
            throw ParseError(line, "vertex count must be positive");
        if (n > max_vertices)
            throw ParseError(line, "vertex count exceeds limit of " + std::to_string(max_vertices));
        return Graph(static_cast<int>(n));
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        std::optional<Graph> g;
        vector<std::pair<int, string>> labels;
        string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            auto text = strip(raw);
            if (text.empty())
                continue;
            if (text[0] == '#') {
                std::istringstream comment(text.substr(1));
                string keyword;
                if (comment >> keyword && keyword == "label") {
                    auto v = parse_int(comment, line, "vertex index after 'label'");
                    string name;
                    if (! (comment >> name))
                        throw ParseError(line, "expected label name");
                    if (! g)
                        throw ParseError(line, "label before vertex count");
                    labels.emplace_back(checked_vertex(v, g->size(), line), name);
                }
                continue;
            }
            auto hash = text.find('#');
            if (hash != string::npos)
                text = strip(text.substr(0, hash));

            std::istringstream fields(text);
            if (! g) {
                auto n = parse_int(fields, line, "vertex count");
                expect_end(fields, line);
                g.emplace(make_graph(n, line));
                continue;
            }
            auto u = parse_int(fields, line, "edge endpoint");
            auto v = parse_int(fields, line, "second edge endpoint");
            expect_end(fields, line);
            g->add_edge(checked_vertex(u, g->size(), line), checked_vertex(v, g->size(), line));
        }
        if (! g)
            throw ParseError(line, "missing vertex count");
        if (! labels.empty()) {
            vector<string> table(g->size());
            for (int v = 0 ; v < g->size() ; ++v)
                table[v] = std::to_string(v);
            for (auto & [v, name] : labels)
                table[v] = name;
            g->set_labels(std::move(table));
        }
        return std::move(*g);
    }

    auto read_dimacs(std::istream & in) -> Graph
    {
        std::optional<Graph> g;
        string raw;
        int line = 0;
        while (std::getline(in, raw)) {
            ++line;
            auto text = strip(raw);
            if (text.empty() || text[0] == 'c' || text[0] == '%')
                continue;
            std::istringstream fields(text);
            string kind;
            fields >> kind;
            if (kind == "p") {
                if (g)
                    throw ParseError(line, "duplicate problem line");
                string format;
                if (! (fields >> format) || (format != "edge" && format != "col"))
                    throw ParseError(line, "expected 'p edge <n> <m>'");
                auto n = parse_int(fields, line, "vertex count");
                parse_int(fields, line, "edge count");
                expect_end(fields, line);
                g.emplace(make_graph(n, line));
            }
            else if (kind == "e") {
                if (! g)
                    throw ParseError(line, "edge before problem line");
                auto u = parse_int(fields, line, "edge endpoint");
                auto v = parse_int(fields, line, "second edge endpoint");
                expect_end(fields, line);
                g->add_edge(checked_vertex(u - 1, g->size(), line), checked_vertex(v - 1, g->size(), line));
            }
            else
                throw ParseError(line, "unknown line type '" + kind + "'");
        }
        if (! g)
            throw ParseError(line, "missing problem line");
        vector<string> table(g->size());
        for (int v = 0 ; v < g->size() ; ++v)
            table[v] = std::to_string(v + 1);
        g->set_labels(std::move(table));
        return std::move(*g);
    }
}

auto warmthkit::parse_graph_format(const string & name) -> GraphFormat
{
    if (name == "edge-list" || name == "el" || name == "edgelist")
        return GraphFormat::edge_list;
    if (name == "dimacs" || name == "col")
        return GraphFormat::dimacs;
    throw InputError("unknown graph format '" + name + "'");
}

auto warmthkit::guess_graph_format(const string & path) -> GraphFormat
{
    auto ends_with = [&] (const string & suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    return (ends_with(".col") || ends_with(".dimacs")) ? GraphFormat::dimacs : GraphFormat::edge_list;
}

auto warmthkit::read_graph(std::istream & in, GraphFormat format) -> Graph
{
    return format == GraphFormat::dimacs ? read_dimacs(in) : read_edge_list(in);
}

auto warmthkit::read_graph_file(const string & path, GraphFormat format) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open '" + path + "'");
    return read_graph(in, format);
}

auto warmthkit::read_graph_file(const string & path) -> Graph
{
    return read_graph_file(path, guess_graph_format(path));
}

auto warmthkit::write_graph(std::ostream & out, const Graph & g, GraphFormat format) -> void
{
    auto edges = g.edges();
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.size() << " " << edges.size() << "\n";
        for (auto [u, v] : edges)
            out << "e " << (u + 1) << " " << (v + 1) << "\n";
        return;
    }
    out << g.size() << "\n";
    if (g.has_labels())
        for (int v = 0 ; v < g.size() ; ++v)
            out << "# label " << v << " " << g.label(v) << "\n";
    for (auto [u, v] : edges)
        out << u << " " << v << "\n";
}

auto warmthkit::write_graph_file(const string & path, const Graph & g, GraphFormat format) -> void
{
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot write '" + path + "'");
    write_graph(out, g, format);
}
