#include "kempe/degeneracy.hpp"

#include <algorithm>
#include <set>

#include "elimination.hpp"

namespace kempe {

namespace detail {

std::vector<int> eliminate_min_degree(const Graph& g, const std::vector<char>& removable,
                                      int& max_removal_degree) {
    const int n = g.vertex_count;
    std::vector<int> degree(n, 0);
    std::vector<char> alive(n, 1);
    // bucket[d] holds the removable vertices of current degree d, ordered by id
    std::vector<std::set<int>> bucket(n > 0 ? n : 1);
    int pending = 0;
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (removable[v]) {
            bucket[degree[v]].insert(v);
            ++pending;
        }
    }
    std::vector<int> removal;
    removal.reserve(pending);
    max_removal_degree = 0;
    int cursor = 0;
    while (pending > 0) {
        while (bucket[cursor].empty()) ++cursor;
        const int v = *bucket[cursor].begin();
        bucket[cursor].erase(bucket[cursor].begin());
        alive[v] = 0;
        --pending;
        removal.push_back(v);
        max_removal_degree = std::max(max_removal_degree, cursor);
        for (int w : g.neighbors(v)) {
            if (!alive[w]) continue;
            if (removable[w]) {
                bucket[degree[w]].erase(w);
                bucket[degree[w] - 1].insert(w);
            }
            --degree[w];
        }
        // degrees drop by at most one per removal
        if (cursor > 0) --cursor;
    }
    return removal;
}

} // namespace detail

DegeneracyResult degeneracy(const Graph& g) {
    std::vector<char> removable(g.vertex_count, 1);
    int value = 0;
    std::vector<int> removal = detail::eliminate_min_degree(g, removable, value);
    std::reverse(removal.begin(), removal.end());
    DegeneracyResult result;
    result.value = g.vertex_count == 0 ? 0 : value;
    result.ordering = make_ordering(std::move(removal), g.vertex_count);
    return result;
}

} // namespace kempe
