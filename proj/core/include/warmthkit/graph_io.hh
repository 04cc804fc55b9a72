#ifndef WARMTHKIT_GRAPH_IO_HH
#define WARMTHKIT_GRAPH_IO_HH

#include <warmthkit/graph.hh>

#include <iosfwd>
#include <string>

namespace warmthkit
{
    enum class GraphFormat
    {
        edge_list,
        dimacs
    };

    /// "edge-list" / "el" / "dimacs" / "col"; throws InputError otherwise.
    auto parse_graph_format(const std::string & name) -> GraphFormat;

    /// Picks a format from the file extension (.col / .dimacs means DIMACS).
    auto guess_graph_format(const std::string & path) -> GraphFormat;

    /**
     * Edge-list: the first non-comment line is n, every further line "u v"
     * with 0-based endpoints, "u u" for a loop, '#' starts a comment. Lines of
     * the form "# label <v> <name>" restore the label table.
     *
     * DIMACS: "c" comments, one "p edge <n> <m>" line, then "e <u> <v>" lines
     * with 1-based endpoints. The original 1-based ids become vertex labels.
     */
    auto read_graph(std::istream & in, GraphFormat format) -> Graph;
    auto read_graph_file(const std::string & path, GraphFormat format) -> Graph;
    auto read_graph_file(const std::string & path) -> Graph;

    auto write_graph(std::ostream & out, const Graph & g, GraphFormat format) -> void;
    auto write_graph_file(const std::string & path, const Graph & g, GraphFormat format) -> void;
}

#endif
