#ifndef COPSHIELD_GRAPH_IO_HPP
#define COPSHIELD_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "copshield/graph.hpp"

namespace copshield {

// Edge-list text format: a header line "n m" followed by m lines "u v" with
// 0-based vertex ids. DIMACS files ("c" comments, "p edge n m", "e u v" with
// 1-based ids) are accepted on input; writers emit edge-list only.

Graph read_graph(std::istream& in, std::string name = "");
Graph read_graph_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace copshield

#endif
