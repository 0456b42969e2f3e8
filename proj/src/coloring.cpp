#include "kempe/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "kempe/errors.hpp"

namespace kempe {

Coloring make_coloring(std::vector<int> colors, int palette_size) {
    if (palette_size < 0) throw contract_error("negative palette size");
    for (std::size_t v = 0; v < colors.size(); ++v)
        if (colors[v] < 1 || colors[v] > palette_size)
            throw contract_error("vertex " + std::to_string(v) + " has color " +
                                 std::to_string(colors[v]) + " outside 1.." +
                                 std::to_string(palette_size));
    return Coloring{std::move(colors), palette_size};
}

bool is_proper(const Graph& g, const Coloring& c) {
    for (int u = 0; u < g.vertex_count; ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.colors[u] == c.colors[v]) return false;
    return true;
}

std::vector<int> kempe_component(const Graph& g, const Coloring& c, int a, int b, int u) {
    if (a == b) throw contract_error("Kempe-component colors must differ");
    if (u < 0 || u >= g.vertex_count)
        throw contract_error("anchor vertex " + std::to_string(u) + " out of range");
    if (c.colors[u] != a && c.colors[u] != b)
        throw contract_error("anchor vertex " + std::to_string(u) + " has color " +
                             std::to_string(c.colors[u]) + ", not in {" + std::to_string(a) +
                             ", " + std::to_string(b) + "}");
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> stack{u}, component;
    seen[u] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        component.push_back(v);
        for (int w : g.neighbors(v)) {
            if (seen[w]) continue;
            if (c.colors[w] != a && c.colors[w] != b) continue;
            seen[w] = 1;
            stack.push_back(w);
        }
    }
    std::sort(component.begin(), component.end());
    return component;
}

Coloring apply_exchange(const Graph& g, const Coloring& c, const KempeExchange& x) {
    Coloring result = c;
    for (int v : kempe_component(g, c, x.color_a, x.color_b, x.anchor)) {
        if (result.colors[v] == x.color_a)
            result.colors[v] = x.color_b;
        else
            result.colors[v] = x.color_a;
    }
    return result;
}

Coloring read_coloring(std::istream& in, int vertex_count, int palette_size) {
    std::vector<int> colors(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        if (!(in >> colors[v]))
            throw input_error("coloring ends after " + std::to_string(v) + " of " +
                              std::to_string(vertex_count) + " entries");
        if (colors[v] < 1 || colors[v] > palette_size)
            throw input_error("entry " + std::to_string(v + 1) + ": color " +
                              std::to_string(colors[v]) + " outside 1.." +
                              std::to_string(palette_size));
    }
    return Coloring{std::move(colors), palette_size};
}

void write_coloring(std::ostream& out, const Coloring& c) {
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        if (v) out << ' ';
        out << c.colors[v];
    }
    out << '\n';
}

} // namespace kempe
