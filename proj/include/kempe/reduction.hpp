#pragma once

#include <iosfwd>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

/// List-coloring instance turned into a plain coloring instance: a copy of G
/// plus a clique of palette vertices, where clique_vertices[i-1] stands for
/// color i. An original vertex is adjacent to exactly the clique vertices of
/// its forbidden colors. Original vertices keep their ids.
struct ReducedGraph {
    Graph graph;
    int palette = 0;
    std::vector<int> clique_vertices;
    int original_count = 0;
};

ReducedGraph build_reduced(const Graph& g, int palette,
                           const std::vector<std::vector<int>>& lists);

/// Vertices with exactly palette-1 clique neighbors: the clique itself plus
/// every original vertex with a single available color. Sorted ascending.
std::vector<int> fixed_set(const ReducedGraph& reduced);

/// Restriction of a proper palette-coloring of the reduced graph to the
/// original vertices, normalized by the color permutation that sends the
/// color of clique_vertices[i-1] to i. The result respects every list.
Coloring project_coloring(const ReducedGraph& reduced, const Coloring& c);

// DIMACS-like edge list followed by a "clique <p> <ids...>" trailer (1-based).
void write_reduced(std::ostream& out, const ReducedGraph& reduced);
ReducedGraph read_reduced(std::istream& in);

} // namespace kempe
