#include "copshield/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "copshield/errors.hpp"

namespace copshield {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
    VertexSet result;
    result.members_ = std::move(out);
    return result;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ',';
        os << members_[i];
    }
    os << '}';
    return os.str();
}

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                        std::string name) {
    if (vertex_count < 0) throw InvalidArgument("vertex count must be nonnegative");
    Graph g;
    g.adjacency_.assign(vertex_count, {});
    g.name_ = std::move(name);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw InvalidArgument("edge endpoint out of range: (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (int v = 0; v < vertex_count; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw InvalidArgument("duplicate edge at vertex " + std::to_string(v));
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    auto dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == kUnreachable; });
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw InvalidArgument("invalid vertex id " + std::to_string(v));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    g.check_vertex(source);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

VertexSet ball(const Graph& g, int center, int radius) {
    if (radius < 0) throw InvalidArgument("ball radius must be nonnegative");
    auto dist = bfs_distances(g, center);
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] != kUnreachable && dist[v] <= radius) members.push_back(v);
    return VertexSet(std::move(members));
}

VertexSet ball_of_set(const Graph& g, const VertexSet& a, int radius) {
    if (radius < 0) throw InvalidArgument("ball radius must be nonnegative");
    if (a.empty()) return {};
    // Multi-source BFS.
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue;
    for (int v : a) {
        g.check_vertex(v);
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == radius) continue;
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> members;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[v] != kUnreachable && dist[v] <= radius) members.push_back(v);
    return VertexSet(std::move(members));
}

bool is_geodesic(const Graph& g, const std::vector<int>& path) {
    if (path.empty()) return false;
    for (int v : path) g.check_vertex(v);
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    auto dist = bfs_distances(g, path.front());
    for (size_t j = 0; j < path.size(); ++j)
        if (dist[path[j]] != static_cast<int>(j)) return false;
    return true;
}

Geodesic geodesic_between(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty() && dist[v] == kUnreachable) {
        int a = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(a)) {  // ascending id: canonical parents
            if (dist[w] == kUnreachable) {
                dist[w] = dist[a] + 1;
                parent[w] = a;
                queue.push_back(w);
            }
        }
    }
    if (dist[v] == kUnreachable)
        throw DisconnectedError("no path between " + std::to_string(u) + " and " +
                                std::to_string(v));
    std::vector<int> path;
    for (int w = v; w != -1; w = parent[w]) path.push_back(w);
    std::reverse(path.begin(), path.end());
    return Geodesic{std::move(path)};
}

Geodesic longest_geodesic(const Graph& g) {
    if (g.vertex_count() == 0) throw InvalidArgument("empty graph has no geodesic");
    if (!g.is_connected()) throw DisconnectedError("longest_geodesic requires a connected graph");
    int best_u = 0, best_v = 0, best = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (dist[v] > best) {
                best = dist[v];
                best_u = u;
                best_v = v;
            }
        }
    }
    return geodesic_between(g, best_u, best_v);
}

int set_diameter(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw InvalidArgument("set_diameter of empty set");
    int best = 0;
    for (int v : s) {
        auto dist = bfs_distances(g, v);
        for (int w : s) {
            if (dist[w] == kUnreachable)
                throw DisconnectedError("set_diameter: vertices in different components");
            best = std::max(best, dist[w]);
        }
    }
    return best;
}

std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed) {
    int n = g.vertex_count();
    std::vector<bool> banned(n, false);
    for (int v : removed) {
        g.check_vertex(v);
        banned[v] = true;
    }
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> components;
    for (int s = 0; s < n; ++s) {
        if (banned[s] || seen[s]) continue;
        std::vector<int> members;
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            members.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!banned[w] && !seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        components.emplace_back(std::move(members));
    }
    // BFS seeds ascend, so components are already ordered by minimum member.
    return components;
}

VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& c) {
    std::vector<int> members;
    for (int v : c) {
        g.check_vertex(v);
        for (int w : g.neighbors(v))
            if (!c.contains(w)) members.push_back(w);
    }
    return VertexSet(std::move(members));
}

int eccentricity(const Graph& g, int v) {
    auto dist = bfs_distances(g, v);
    int best = 0;
    for (int d : dist) {
        if (d == kUnreachable)
            throw DisconnectedError("eccentricity requires a connected graph");
        best = std::max(best, d);
    }
    return best;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices, std::string name) {
    Subgraph sub;
    sub.from_parent.assign(g.vertex_count(), -1);
    for (int v : vertices) {
        g.check_vertex(v);
        sub.from_parent[v] = static_cast<int>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices)
        for (int w : g.neighbors(v))
            if (v < w && sub.from_parent[w] != -1)
                edges.emplace_back(sub.from_parent[v], sub.from_parent[w]);
    sub.graph = Graph::from_edges(static_cast<int>(sub.to_parent.size()), edges,
                                  std::move(name));
    return sub;
}

}  // namespace copshield
