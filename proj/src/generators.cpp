#include "copshield/generators.hpp"

#include <random>

#include "copshield/errors.hpp"

namespace copshield {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges, "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges, "K1_" + std::to_string(leaves));
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InvalidArgument("grid needs positive dimensions");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, edges,
                             "grid" + std::to_string(rows) + "x" + std::to_string(cols));
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges, "petersen");
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw InvalidArgument("bipartite sides must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges,
                             "K" + std::to_string(a) + "_" + std::to_string(b));
}

bool seeded_flip(uint64_t raw_draw, double p) {
    return (raw_draw >> 11) * (1.0 / 9007199254740992.0) < p;
}

Graph gnp_connected(int n, double p, uint64_t seed, int max_retries) {
    if (n < 1) throw InvalidArgument("gnp needs at least one vertex");
    if (p < 0.0 || p > 1.0) throw InvalidArgument("gnp probability out of range");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (seeded_flip(rng(), p)) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges,
                                    "gnp" + std::to_string(n) + "_s" + std::to_string(seed));
        if (g.is_connected()) return g;
    }
    throw Error("gnp_connected: no connected sample within retry budget");
}

Graph star_forest_plus_cover(int n, int cover_size) {
    if (cover_size < 1) throw InvalidArgument("cover size must be positive");
    if (cover_size == 1) {
        if (n < 2) throw InvalidArgument("star-forest-plus-cover needs n >= 2");
        return star_graph(n - 1);
    }
    int connectors = cover_size - 1;
    int privates = n - cover_size - connectors;
    if (privates < cover_size)
        throw InvalidArgument("star-forest-plus-cover: n too small for cover size " +
                              std::to_string(cover_size) + " (need n >= " +
                              std::to_string(3 * cover_size - 1) + ")");
    std::vector<std::pair<int, int>> edges;
    int next = cover_size;
    for (int j = 0; j + 1 < cover_size; ++j) {
        edges.emplace_back(next, j);
        edges.emplace_back(next, j + 1);
        ++next;
    }
    // Private leaves round-robin, starting at the last core vertex so every
    // core vertex ends up matched to a leaf of its own.
    for (int i = 0; next < n; ++next, ++i)
        edges.emplace_back(next, (cover_size - 1 - i % cover_size + cover_size) % cover_size);
    return Graph::from_edges(n, edges, "sfc" + std::to_string(n) + "_" +
                                           std::to_string(cover_size));
}

}  // namespace copshield
