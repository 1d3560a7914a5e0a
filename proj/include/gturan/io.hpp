#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

// graph6 interchange format, bit-exact: N(n) header then the upper triangle
// column by column, six bits per printable byte.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

// Plain text form "n; u-v,u-v,...". The empty graph on n vertices is "n;".
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(std::string_view text);

// Reads one graph per non-empty line; lines are parsed as graph6 unless they
// contain a ';', in which case the edge-list form is used.
std::vector<Graph> read_graphs(std::istream& in);
Graph parse_graph_line(std::string_view line);

} // namespace gturan
