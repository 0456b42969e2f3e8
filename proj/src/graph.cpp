#include "kempe/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "kempe/errors.hpp"

namespace kempe {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nb : adj) total += nb.size();
    return total / 2;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw input_error("negative vertex count");
    Graph g;
    g.vertex_count = vertex_count;
    g.adj.assign(vertex_count, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
            std::ostringstream msg;
            msg << "edge (" << u << ", " << v << ") out of range for " << vertex_count
                << " vertices";
            throw input_error(msg.str());
        }
        if (u == v) {
            std::ostringstream msg;
            msg << "self-loop at vertex " << u;
            throw input_error(msg.str());
        }
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

VertexOrdering make_ordering(std::vector<int> sequence, int vertex_count) {
    VertexOrdering order;
    order.position.assign(vertex_count, -1);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        int v = sequence[i];
        if (v < 0 || v >= vertex_count)
            throw contract_error("ordering mentions vertex " + std::to_string(v) +
                                 " outside the graph");
        if (order.position[v] >= 0)
            throw contract_error("ordering repeats vertex " + std::to_string(v));
        order.position[v] = static_cast<int>(i);
    }
    order.sequence = std::move(sequence);
    return order;
}

bool covers_all(const VertexOrdering& order, const Graph& g) {
    if (static_cast<int>(order.sequence.size()) != g.vertex_count) return false;
    if (static_cast<int>(order.position.size()) != g.vertex_count) return false;
    for (int v = 0; v < g.vertex_count; ++v)
        if (order.position[v] < 0) return false;
    return true;
}

int pred_count(const Graph& g, const VertexOrdering& order, int v) {
    if (!order.contains(v))
        throw contract_error("vertex " + std::to_string(v) + " does not appear in the ordering");
    const int pv = order.position[v];
    int count = 0;
    for (int u : g.neighbors(v))
        if (order.contains(u) && order.position[u] < pv) ++count;
    return count;
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    int n = -1;
    long declared_edges = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "p") {
            std::string kind;
            iss >> kind >> n >> declared_edges;
            if (!iss || (kind != "edge" && kind != "edges" && kind != "col") || n < 0)
                throw input_error("line " + std::to_string(line_no) + ": bad problem header");
        } else if (tag == "e") {
            int u, v;
            iss >> u >> v;
            if (!iss)
                throw input_error("line " + std::to_string(line_no) + ": bad edge line");
            if (n < 0)
                throw input_error("line " + std::to_string(line_no) +
                                  ": edge before problem header");
            edges.emplace_back(u - 1, v - 1);
        } else if (!tag.empty()) {
            throw input_error("line " + std::to_string(line_no) + ": unknown line type '" +
                              tag + "'");
        }
    }
    if (n < 0) throw input_error("missing 'p edge' header");
    try {
        return build_graph(n, edges);
    } catch (const input_error& e) {
        throw input_error(std::string("invalid edge list: ") + e.what());
    }
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

} // namespace kempe
