#ifndef COPSHIELD_GRAPH_HPP
#define COPSHIELD_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace copshield {

inline constexpr int kUnreachable = -1;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members);
    VertexSet(std::initializer_list<int> members);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<int>& members() const { return members_; }

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    std::vector<int>::const_iterator begin() const { return members_.begin(); }
    std::vector<int>::const_iterator end() const { return members_.end(); }

    bool operator==(const VertexSet&) const = default;

    std::string to_string() const;

private:
    std::vector<int> members_;
};

/// Immutable undirected graph. Adjacency lists are sorted; construction
/// rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;  // empty graph
    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges,
                            std::string name = "");

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;
    bool is_connected() const;
    const std::string& name() const { return name_; }
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    void check_vertex(int v) const;  // throws InvalidArgument

private:
    std::vector<std::vector<int>> adjacency_;
    int edge_count_ = 0;
    std::string name_;
};

/// A path certified at construction to realize the graph distance between its
/// endpoints: consecutive vertices adjacent and dist(p0, pj) = j for all j.
struct Geodesic {
    std::vector<int> vertices;  // p0..pL
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int source() const { return vertices.front(); }
    int target() const { return vertices.back(); }
    VertexSet vertex_set() const { return VertexSet(vertices); }
};

std::vector<int> bfs_distances(const Graph& g, int source);

VertexSet ball(const Graph& g, int center, int radius);

// Union of balls around the members; empty input yields the empty set.
VertexSet ball_of_set(const Graph& g, const VertexSet& a, int radius);

bool is_geodesic(const Graph& g, const std::vector<int>& path);

// Canonical shortest path: BFS explores neighbors in ascending id and the
// path is reconstructed through parent pointers, so results are reproducible.
Geodesic geodesic_between(const Graph& g, int u, int v);

// A geodesic realizing the diameter; ties broken toward the smallest
// (source, target) pair.
Geodesic longest_geodesic(const Graph& g);

int set_diameter(const Graph& g, const VertexSet& s);

// Connected components of the induced subgraph on V(g) \ removed,
// ordered by minimum member id.
std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed);

VertexSet open_neighborhood_of_set(const Graph& g, const VertexSet& c);

int eccentricity(const Graph& g, int v);

/// Induced subgraph together with the id maps in both directions.
struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;    // sub id -> parent id
    std::vector<int> from_parent;  // parent id -> sub id, -1 when absent
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices, std::string name = "");

}  // namespace copshield

#endif
