#include "kempe/subdegeneracy.hpp"

#include <algorithm>
#include <sstream>

#include "elimination.hpp"
#include "kempe/errors.hpp"

namespace kempe {

namespace {

std::vector<char> fixed_mask(const Graph& g, const std::vector<int>& fixed) {
    std::vector<char> mask(g.vertex_count, 0);
    for (int v : fixed) {
        if (v < 0 || v >= g.vertex_count)
            throw contract_error("fixed vertex " + std::to_string(v) + " out of range");
        mask[v] = 1;
    }
    return mask;
}

int max_pred_outside_fixed(const Graph& g, const std::vector<char>& mask,
                           const VertexOrdering& order) {
    int worst = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (!mask[v]) worst = std::max(worst, pred_count(g, order, v));
    return worst;
}

} // namespace

std::vector<int> vertex_elimination(const Graph& g, const std::vector<int>& fixed) {
    std::vector<char> mask = fixed_mask(g, fixed);
    std::vector<char> removable(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) removable[v] = !mask[v];
    int ignored = 0;
    std::vector<int> removal = detail::eliminate_min_degree(g, removable, ignored);
    std::reverse(removal.begin(), removal.end());
    return removal;
}

bool check_sprime(const Graph& g, const std::vector<int>& fixed, const VertexOrdering& order) {
    if (!covers_all(order, g))
        throw contract_error("ordering must cover every vertex of the graph");
    std::vector<char> mask = fixed_mask(g, fixed);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (mask[v]) continue;
        bool free_pred = false;
        for (int u : g.neighbors(v))
            if (!mask[u] && order.position[u] < order.position[v]) {
                free_pred = true;
                break;
            }
        if (!free_pred) continue;
        for (int w : g.neighbors(v))
            if (mask[w] && order.position[w] > order.position[v]) return false;
    }
    return true;
}

SubdegResult postprocess(const Graph& g, const std::vector<int>& fixed,
                         const std::vector<int>& tail) {
    std::vector<char> mask = fixed_mask(g, fixed);
    std::vector<int> fixed_sorted(fixed);
    std::sort(fixed_sorted.begin(), fixed_sorted.end());
    fixed_sorted.erase(std::unique(fixed_sorted.begin(), fixed_sorted.end()),
                       fixed_sorted.end());
    if (fixed_sorted.size() + tail.size() != static_cast<std::size_t>(g.vertex_count))
        throw contract_error("elimination ordering does not cover the non-fixed vertices");

    std::vector<int> base;
    base.reserve(g.vertex_count);
    base.insert(base.end(), fixed_sorted.begin(), fixed_sorted.end());
    base.insert(base.end(), tail.begin(), tail.end());
    VertexOrdering base_order = make_ordering(base, g.vertex_count);
    const int lambda = max_pred_outside_fixed(g, mask, base_order);

    // longest prefix of the elimination order that is pairwise non-adjacent
    std::size_t prefix = tail.empty() ? 0 : 1;
    while (prefix < tail.size()) {
        bool independent = true;
        for (std::size_t j = 0; j < prefix && independent; ++j)
            if (g.has_edge(tail[prefix], tail[j])) independent = false;
        if (!independent) break;
        ++prefix;
    }

    std::vector<int> moved;
    moved.reserve(g.vertex_count);
    moved.insert(moved.end(), tail.begin(), tail.begin() + prefix);
    moved.insert(moved.end(), fixed_sorted.begin(), fixed_sorted.end());
    moved.insert(moved.end(), tail.begin() + prefix, tail.end());

    SubdegResult result;
    result.ordering = make_ordering(std::move(moved), g.vertex_count);
    result.value = max_pred_outside_fixed(g, mask, result.ordering);
    result.lambda_value = lambda;
    result.moved_prefix = static_cast<int>(prefix);
    return result;
}

SubdegResult subdeg_ub(const Graph& g, const std::vector<int>& fixed) {
    return postprocess(g, fixed, vertex_elimination(g, fixed));
}

std::string format_subdeg(const SubdegResult& result) {
    std::ostringstream out;
    out << "subdeg_ub " << result.value << " lambda " << result.lambda_value << " prefix "
        << result.moved_prefix << '\n';
    for (std::size_t i = 0; i < result.ordering.sequence.size(); ++i) {
        if (i) out << ' ';
        out << result.ordering.sequence[i] + 1;
    }
    out << '\n';
    return out.str();
}

} // namespace kempe
