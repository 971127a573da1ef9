#include "copshield/vertex_cover.hpp"

#include <algorithm>
#include <cstdint>

#include "copshield/errors.hpp"

namespace copshield {

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

namespace {

// Graphs of at most 64 vertices as neighbor bitmasks.
struct MaskGraph {
    std::vector<uint64_t> adj;

    int max_degree_vertex(uint64_t alive) const {
        int best = -1, best_deg = -1;
        for (size_t v = 0; v < adj.size(); ++v) {
            if (!(alive >> v & 1)) continue;
            int deg = __builtin_popcountll(adj[v] & alive);
            if (deg > best_deg) {
                best_deg = deg;
                best = static_cast<int>(v);
            }
        }
        return best_deg > 0 ? best : -1;
    }

    // Greedy maximal matching: disjoint edges lower-bound any cover.
    int matching_lower_bound(uint64_t alive) const {
        int bound = 0;
        uint64_t rem = alive;
        for (size_t v = 0; v < adj.size(); ++v) {
            if (!(rem >> v & 1)) continue;
            uint64_t nb = adj[v] & rem;
            if (nb) {
                int w = __builtin_ctzll(nb);
                rem &= ~(1ull << v);
                rem &= ~(1ull << w);
                ++bound;
            }
        }
        return bound;
    }
};

struct CoverSearch {
    const MaskGraph& mg;
    uint64_t best_cover = 0;
    int best_size;

    void run(uint64_t alive, uint64_t chosen, int chosen_size) {
        if (chosen_size + mg.matching_lower_bound(alive) >= best_size) return;
        int v = mg.max_degree_vertex(alive);
        if (v == -1) {
            best_size = chosen_size;
            best_cover = chosen;
            return;
        }
        // Either v is in the cover, or all of its remaining neighbors are.
        run(alive & ~(1ull << v), chosen | (1ull << v), chosen_size + 1);
        uint64_t nb = mg.adj[v] & alive;
        run(alive & ~nb & ~(1ull << v), chosen | nb,
            chosen_size + __builtin_popcountll(nb));
    }
};

}  // namespace

VertexSet min_vertex_cover(const Graph& g, int size_limit) {
    int n = g.vertex_count();
    if (n > size_limit)
        throw BudgetExceeded("min_vertex_cover: graph has " + std::to_string(n) +
                             " vertices, limit " + std::to_string(size_limit));
    if (n > 64) throw BudgetExceeded("min_vertex_cover: more than 64 vertices");

    MaskGraph mg;
    mg.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        mg.adj[u] |= 1ull << v;
        mg.adj[v] |= 1ull << u;
    }
    CoverSearch search{mg, 0, n + 1};
    uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    search.run(all, 0, 0);

    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (search.best_cover >> v & 1) members.push_back(v);
    VertexSet cover(std::move(members));
    if (!is_vertex_cover(g, cover))
        throw Error("min_vertex_cover: certificate check failed");
    return cover;
}

}  // namespace copshield
