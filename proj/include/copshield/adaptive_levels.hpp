#ifndef COPSHIELD_ADAPTIVE_LEVELS_HPP
#define COPSHIELD_ADAPTIVE_LEVELS_HPP

#include <map>
#include <string>

#include "copshield/graph.hpp"

namespace copshield {

struct LevelParams {
    int k = 2;
    int d = 2;
    int t = 3;
    double alpha = 2.0;
};

/// The robber-start-dependent partition of reachable x-vertices, levels
/// 1..t+1. A_i collects the slow-growth region around the previous level,
/// D_i the overflow that gets a dedicated cop dispatched to it.
struct AdaptiveLevels {
    int r0 = -1;
    LevelParams params;
    // Indexed 1..t+1; index 0 unused.
    std::vector<VertexSet> a_sets;
    std::vector<VertexSet> d_sets;
    std::vector<VertexSet> n_sets;
    // phi[i] maps each vertex of D_i to its post in C_{i-1}; filled by the
    // strategy builder, levels 2..t+1.
    std::vector<std::map<int, int>> phi;
    std::string construction_log;

    int levels() const { return params.t + 1; }
    int dispatch_radius(int i) const { return (1 << (i - 1)) + params.d; }
};

/// Level construction: A_1 is the ball of radius 2d+1 around the robber start
/// intersected with x; each later A_i grows greedily (ascending id, repeated
/// passes) inside the reach of A_{i-1} while the ball of A_i with radius
/// 2^(i-1)+d keeps at most alpha*k*|A_i| vertices of x; D_i is the overflow.
AdaptiveLevels build_adaptive_levels(const Graph& g, const VertexSet& x, int r0,
                                     const LevelParams& params);

// True when no single outside candidate can be added to a_i without breaking
// the growth constraint; the greedy construction must always pass this.
bool maximality_audit(const Graph& g, const VertexSet& x, const VertexSet& a_i,
                      const VertexSet& candidates, int radius, double alpha_k);

struct HallResult {
    bool success = false;
    std::map<int, int> matching;  // d_set vertex -> c_set vertex
    VertexSet deficient;          // on failure: Y with |N(Y)| < |Y|
};

/// Maximum bipartite matching by augmenting paths between d_set and c_set,
/// with an edge whenever the graph distance is at most radius. Succeeds when
/// d_set is saturated; otherwise reports a deficient witness set.
HallResult hall_match(const Graph& g, const VertexSet& d_set, const VertexSet& c_set,
                      int radius);

}  // namespace copshield

#endif
