#ifndef COPSHIELD_VERTEX_COVER_HPP
#define COPSHIELD_VERTEX_COVER_HPP

#include "copshield/graph.hpp"

namespace copshield {

bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// Exact minimum vertex cover by branch and bound: branch on a maximum-degree
/// vertex (take it, or take its whole neighborhood). The returned certificate
/// is re-checked against every edge before returning. Throws BudgetExceeded
/// when the graph is larger than size_limit.
VertexSet min_vertex_cover(const Graph& g, int size_limit = 40);

}  // namespace copshield

#endif
