#include "copshield/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "copshield/errors.hpp"

namespace copshield {

namespace {

Graph read_dimacs(std::istream& in, std::string name) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'c') continue;
        if (tag == 'p') {
            std::string kind;
            ls >> kind >> n >> m;
            if (!ls || (kind != "edge" && kind != "col"))
                throw ParseError("bad DIMACS problem line: " + line);
        } else if (tag == 'e') {
            int u, v;
            ls >> u >> v;
            if (!ls) throw ParseError("bad DIMACS edge line: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("unexpected DIMACS line: " + line);
        }
    }
    if (n < 0) throw ParseError("DIMACS input missing problem line");
    if (m >= 0 && m != static_cast<int>(edges.size()))
        throw ParseError("DIMACS edge count mismatch");
    return Graph::from_edges(n, edges, std::move(name));
}

}  // namespace

Graph read_graph(std::istream& in, std::string name) {
    // Peek the first non-space character to distinguish DIMACS from edge-list.
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
        in.get();
        c = in.peek();
    }
    if (c == 'c' || c == 'p') return read_dimacs(in, std::move(name));

    int n, m;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) +
                             " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    try {
        return Graph::from_edges(n, edges, std::move(name));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file: " + path);
    write_edge_list(out, g);
}

}  // namespace copshield
