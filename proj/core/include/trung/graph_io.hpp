#ifndef TRUNG_GRAPH_IO_HPP
#define TRUNG_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "trung/graph.hpp"

namespace trung {

struct EdgeListParse {
    Graph graph;
    // duplicate "u v" pairs were present and collapsed
    bool duplicate_edges = false;
};

// Format: optional '#' comment lines and blank lines, a header "n m", then m
// lines "u v" with 0-based endpoints. Throws ParseError (with line number)
// on malformed lines, out-of-range indices or self-loops.
EdgeListParse parse_edge_list(std::string_view text);

// Canonical form: header, then edges "u v" with u < v sorted
// lexicographically. Round-trips through parse_edge_list.
std::string write_edge_list(const Graph& g);

// One short-form graph6 record (n <= 62), no trailing newline expected.
Graph parse_graph6(std::string_view record);

// Short-form graph6; throws CapacityError for graphs above 62 vertices.
std::string write_graph6(const Graph& g);

}  // namespace trung

#endif  // TRUNG_GRAPH_IO_HPP
