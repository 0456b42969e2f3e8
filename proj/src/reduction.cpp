#include "kempe/reduction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

ReducedGraph build_reduced(const Graph& g, int palette,
                           const std::vector<std::vector<int>>& lists) {
    if (palette < 1) throw input_error("palette size must be positive");
    if (static_cast<int>(lists.size()) != g.vertex_count)
        throw input_error("expected one color list per vertex");

    std::vector<std::vector<char>> allowed(g.vertex_count,
                                           std::vector<char>(palette + 1, 0));
    for (int v = 0; v < g.vertex_count; ++v) {
        if (lists[v].empty())
            throw input_error("vertex " + std::to_string(v) + " has an empty color list");
        for (int color : lists[v]) {
            if (color < 1 || color > palette)
                throw input_error("vertex " + std::to_string(v) + " lists color " +
                                  std::to_string(color) + " outside 1.." +
                                  std::to_string(palette));
            allowed[v][color] = 1;
        }
    }

    const int n = g.vertex_count;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    for (int i = 0; i < palette; ++i)
        for (int j = i + 1; j < palette; ++j) edges.emplace_back(n + i, n + j);
    for (int v = 0; v < n; ++v)
        for (int color = 1; color <= palette; ++color)
            if (!allowed[v][color]) edges.emplace_back(v, n + color - 1);

    ReducedGraph reduced;
    reduced.graph = build_graph(n + palette, edges);
    reduced.palette = palette;
    reduced.original_count = n;
    reduced.clique_vertices.resize(palette);
    for (int i = 0; i < palette; ++i) reduced.clique_vertices[i] = n + i;
    return reduced;
}

std::vector<int> fixed_set(const ReducedGraph& reduced) {
    std::vector<char> in_clique(reduced.graph.vertex_count, 0);
    for (int v : reduced.clique_vertices) in_clique[v] = 1;
    std::vector<int> members;
    for (int v = 0; v < reduced.graph.vertex_count; ++v) {
        int clique_neighbors = 0;
        for (int w : reduced.graph.neighbors(v))
            if (in_clique[w]) ++clique_neighbors;
        if (clique_neighbors == reduced.palette - 1) members.push_back(v);
    }
    return members;
}

Coloring project_coloring(const ReducedGraph& reduced, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != reduced.graph.vertex_count)
        throw contract_error("coloring size does not match the reduced graph");
    if (c.palette_size != reduced.palette)
        throw contract_error("coloring palette does not match the reduced graph");
    if (!is_proper(reduced.graph, c))
        throw contract_error("projection requires a proper coloring of the reduced graph");

    // The clique occupies all palette colors, so its colors form a permutation.
    std::vector<int> to_slot(reduced.palette + 1, 0);
    for (int i = 0; i < reduced.palette; ++i)
        to_slot[c.colors[reduced.clique_vertices[i]]] = i + 1;

    std::vector<int> projected(reduced.original_count);
    for (int v = 0; v < reduced.original_count; ++v) projected[v] = to_slot[c.colors[v]];
    return make_coloring(std::move(projected), reduced.palette);
}

void write_reduced(std::ostream& out, const ReducedGraph& reduced) {
    write_dimacs(out, reduced.graph);
    out << "clique " << reduced.palette;
    for (int v : reduced.clique_vertices) out << ' ' << v + 1;
    out << '\n';
}

ReducedGraph read_reduced(std::istream& in) {
    std::ostringstream graph_part;
    std::string line, trailer;
    while (std::getline(in, line)) {
        if (line.rfind("clique", 0) == 0) {
            trailer = line;
            break;
        }
        graph_part << line << '\n';
    }
    if (trailer.empty()) throw input_error("missing 'clique' trailer");
    std::istringstream graph_in(graph_part.str());
    ReducedGraph reduced;
    reduced.graph = read_dimacs(graph_in);

    std::istringstream tin(trailer);
    std::string tag;
    tin >> tag >> reduced.palette;
    if (!tin || reduced.palette < 1) throw input_error("bad 'clique' trailer");
    reduced.clique_vertices.resize(reduced.palette);
    for (int i = 0; i < reduced.palette; ++i) {
        int v;
        if (!(tin >> v) || v < 1 || v > reduced.graph.vertex_count)
            throw input_error("bad clique vertex in trailer");
        reduced.clique_vertices[i] = v - 1;
    }
    reduced.original_count = reduced.graph.vertex_count - reduced.palette;
    for (int i = 0; i < reduced.palette; ++i)
        for (int j = i + 1; j < reduced.palette; ++j)
            if (!reduced.graph.has_edge(reduced.clique_vertices[i], reduced.clique_vertices[j]))
                throw input_error("trailer vertices do not induce a clique");
    return reduced;
}

} // namespace kempe
