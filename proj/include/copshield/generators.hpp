#ifndef COPSHIELD_GENERATORS_HPP
#define COPSHIELD_GENERATORS_HPP

#include <cstdint>

#include "copshield/graph.hpp"

namespace copshield {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);
Graph petersen_graph();
Graph complete_bipartite_graph(int a, int b);

// Erdos-Renyi G(n,p), resampled until connected. Deterministic for a fixed
// seed. Throws after max_retries failures.
Graph gnp_connected(int n, double p, uint64_t seed, int max_retries = 1000);

// Independent core of cover_size vertices, each with private pendant leaves,
// consecutive cores joined through shared connector leaves. Bipartite with a
// core-saturating matching, so the minimum vertex cover is exactly the core.
Graph star_forest_plus_cover(int n, int cover_size);

// Uniform-ish flip helper shared by the seeded generators: consumes one
// mt19937_64 draw and compares against p. Bit-reproducible across platforms,
// unlike std::bernoulli_distribution.
bool seeded_flip(uint64_t raw_draw, double p);

}  // namespace copshield

#endif
