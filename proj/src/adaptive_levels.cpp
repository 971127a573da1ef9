#include "copshield/adaptive_levels.hpp"

#include <sstream>

#include "copshield/errors.hpp"

namespace copshield {

namespace {

long long ball_x_size(const Graph& g, const VertexSet& a, int radius, const VertexSet& x) {
    if (a.empty()) return 0;
    return ball_of_set(g, a, radius).set_intersection(x).size();
}

}  // namespace

bool maximality_audit(const Graph& g, const VertexSet& x, const VertexSet& a_i,
                      const VertexSet& candidates, int radius, double alpha_k) {
    for (int z : candidates) {
        if (a_i.contains(z)) continue;
        VertexSet grown = a_i;
        grown.insert(z);
        if (ball_x_size(g, grown, radius, x) <= alpha_k * grown.size()) return false;
    }
    return true;
}

AdaptiveLevels build_adaptive_levels(const Graph& g, const VertexSet& x, int r0,
                                     const LevelParams& params) {
    g.check_vertex(r0);
    AdaptiveLevels levels;
    levels.r0 = r0;
    levels.params = params;
    int top = params.t + 1;
    levels.a_sets.assign(top + 1, {});
    levels.d_sets.assign(top + 1, {});
    levels.n_sets.assign(top + 1, {});
    levels.phi.assign(top + 1, {});

    std::ostringstream log;
    levels.a_sets[1] = ball(g, r0, 2 * params.d + 1).set_intersection(x);
    levels.n_sets[1] = levels.a_sets[1];
    log << "A1=" << levels.a_sets[1].to_string();

    double alpha_k = params.alpha * params.k;
    for (int i = 2; i <= top; ++i) {
        int reach_radius = (1 << (i - 2)) + params.d;
        int growth_radius = (1 << (i - 1)) + params.d;
        VertexSet candidates =
            levels.a_sets[i - 1].empty()
                ? VertexSet{}
                : ball_of_set(g, levels.a_sets[i - 1], reach_radius).set_intersection(x);

        // Greedy maximal subset under the growth constraint: repeated
        // ascending-id passes, since a successful insertion raises the budget
        // and can unlock earlier candidates.
        VertexSet a;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int z : candidates) {
                if (a.contains(z)) continue;
                VertexSet grown = a;
                grown.insert(z);
                if (ball_x_size(g, grown, growth_radius, x) <= alpha_k * grown.size()) {
                    a = std::move(grown);
                    changed = true;
                }
            }
        }
        levels.a_sets[i] = a;
        levels.d_sets[i] = candidates.set_difference(a);
        levels.n_sets[i] = levels.n_sets[i - 1]
                               .set_union(levels.a_sets[i])
                               .set_union(levels.d_sets[i]);
        log << " |A" << i << "|=" << levels.a_sets[i].size() << " |D" << i
            << "|=" << levels.d_sets[i].size();
    }
    // N_i as defined is A_i plus all earlier D_j; the accumulation above only
    // adds sets, so recompute exactly.
    VertexSet d_acc;
    for (int i = 1; i <= top; ++i) {
        d_acc = d_acc.set_union(levels.d_sets[i]);
        levels.n_sets[i] = levels.a_sets[i].set_union(d_acc);
    }
    levels.construction_log = log.str();
    return levels;
}

HallResult hall_match(const Graph& g, const VertexSet& d_set, const VertexSet& c_set,
                      int radius) {
    HallResult result;
    const auto& left = d_set.members();
    const auto& right = c_set.members();
    int nl = static_cast<int>(left.size());
    int nr = static_cast<int>(right.size());

    // Adjacency by distance threshold.
    std::vector<std::vector<int>> adj(nl);
    for (int i = 0; i < nl; ++i) {
        auto dist = bfs_distances(g, left[i]);
        for (int j = 0; j < nr; ++j)
            if (dist[right[j]] != kUnreachable && dist[right[j]] <= radius)
                adj[i].push_back(j);
    }

    std::vector<int> match_left(nl, -1), match_right(nr, -1);
    std::vector<char> visited(nr, 0);
    auto augment = [&](auto&& self, int i) -> bool {
        for (int j : adj[i]) {
            if (visited[j]) continue;
            visited[j] = 1;
            if (match_right[j] == -1 || self(self, match_right[j])) {
                match_left[i] = j;
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < nl; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(augment, i);
    }

    int saturated = 0;
    for (int i = 0; i < nl; ++i)
        if (match_left[i] != -1) ++saturated;
    if (saturated == nl) {
        result.success = true;
        for (int i = 0; i < nl; ++i) result.matching[left[i]] = right[match_left[i]];
        return result;
    }

    // Deficient witness: alternating reachability from any unmatched left
    // vertex gives Y with |N(Y)| = |Y| - 1.
    int start = 0;
    while (match_left[start] != -1) ++start;
    std::vector<char> seen_left(nl, 0), seen_right(nr, 0);
    std::vector<int> stack{start};
    seen_left[start] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : adj[i]) {
            if (seen_right[j]) continue;
            seen_right[j] = 1;
            if (match_right[j] != -1 && !seen_left[match_right[j]]) {
                seen_left[match_right[j]] = 1;
                stack.push_back(match_right[j]);
            }
        }
    }
    std::vector<int> witness;
    for (int i = 0; i < nl; ++i)
        if (seen_left[i]) witness.push_back(left[i]);
    result.success = false;
    result.deficient = VertexSet(std::move(witness));
    return result;
}

}  // namespace copshield
