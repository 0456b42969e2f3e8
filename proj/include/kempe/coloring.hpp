#pragma once

#include <iosfwd>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Total assignment of colors {1..palette_size} to the vertices of a graph.
/// Properness is a computed predicate, never assumed.
struct Coloring {
    std::vector<int> colors;
    int palette_size = 0;

    int color(int v) const { return colors[v]; }
    bool operator==(const Coloring&) const = default;
};

/// One component swap: exchange color_a and color_b inside the Kempe-component
/// of anchor in G(color_a, color_b).
struct KempeExchange {
    int color_a = 0;
    int color_b = 0;
    int anchor = 0;

    bool operator==(const KempeExchange&) const = default;
};

Coloring make_coloring(std::vector<int> colors, int palette_size);

bool is_proper(const Graph& g, const Coloring& c);

/// Connected component of u in the subgraph induced by color classes a and b.
/// Returned sorted ascending. Requires c(u) in {a, b}.
std::vector<int> kempe_component(const Graph& g, const Coloring& c, int a, int b, int u);

/// Swap colors a/b inside the Kempe-component of the anchor; everything else unchanged.
Coloring apply_exchange(const Graph& g, const Coloring& c, const KempeExchange& x);

// One 1-based color per vertex, whitespace separated, vertex order implicit.
Coloring read_coloring(std::istream& in, int vertex_count, int palette_size);
void write_coloring(std::ostream& out, const Coloring& c);

} // namespace kempe
