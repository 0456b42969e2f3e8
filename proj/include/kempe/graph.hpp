#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace kempe {

/// Undirected simple graph over dense 0-based vertex ids.
/// Adjacency lists are sorted and symmetric; self-loops are rejected at build time.
struct Graph {
    int vertex_count = 0;
    std::vector<std::vector<int>> adj;

    const std::vector<int>& neighbors(int v) const { return adj[v]; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    std::size_t edge_count() const;

    bool operator==(const Graph&) const = default;
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

/// Linear arrangement of a subset (or all) of the vertices.
/// position[v] is the index of v in sequence, or -1 if v does not appear.
struct VertexOrdering {
    std::vector<int> sequence;
    std::vector<int> position;

    bool contains(int v) const {
        return v >= 0 && v < static_cast<int>(position.size()) && position[v] >= 0;
    }
    std::size_t size() const { return sequence.size(); }
};

VertexOrdering make_ordering(std::vector<int> sequence, int vertex_count);
bool covers_all(const VertexOrdering& order, const Graph& g);

/// Number of neighbors of v that strictly precede v in the ordering.
/// Neighbors absent from the ordering are not counted.
int pred_count(const Graph& g, const VertexOrdering& order, int v);

// DIMACS-like edge list: "p edge <n> <m>" header, then "e <u> <v>" lines, 1-based.
Graph read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Graph& g);

} // namespace kempe
