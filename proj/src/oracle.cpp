#include "kempe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "kempe/errors.hpp"

namespace kempe {

EnumerationCaps caps_from_env() {
    EnumerationCaps caps;
    const char* raw = std::getenv("KEMPE_RECON_CAPS");
    if (!raw) return caps;
    int v = 0, k = 0;
    char comma = 0;
    std::istringstream iss(raw);
    if (iss >> v >> comma >> k && comma == ',' && v > 0 && k > 0) {
        caps.max_vertices = v;
        caps.max_colors = k;
        return caps;
    }
    throw input_error("KEMPE_RECON_CAPS must look like '<max_vertices>,<max_colors>'");
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int k,
                                          const std::vector<std::vector<int>>* lists,
                                          EnumerationCaps caps) {
    if (g.vertex_count > caps.max_vertices || k > caps.max_colors) {
        std::ostringstream msg;
        msg << "enumeration refused: " << g.vertex_count << " vertices with " << k
            << " colors exceeds caps (" << caps.max_vertices << ", " << caps.max_colors
            << "); search space ~" << std::pow(static_cast<double>(k), g.vertex_count)
            << " colorings";
        throw input_error(msg.str());
    }
    const int n = g.vertex_count;
    std::vector<std::vector<int>> palette(n);
    for (int v = 0; v < n; ++v) {
        if (lists) {
            if (static_cast<int>(lists->size()) != n)
                throw input_error("expected one color list per vertex");
            palette[v] = (*lists)[v];
            std::sort(palette[v].begin(), palette[v].end());
            palette[v].erase(std::unique(palette[v].begin(), palette[v].end()),
                             palette[v].end());
            for (int color : palette[v])
                if (color < 1 || color > k)
                    throw input_error("vertex " + std::to_string(v) + " lists color " +
                                      std::to_string(color) + " outside 1.." +
                                      std::to_string(k));
            if (palette[v].empty())
                throw input_error("vertex " + std::to_string(v) + " has an empty color list");
        } else {
            palette[v].resize(k);
            for (int color = 1; color <= k; ++color) palette[v][color - 1] = color;
        }
    }

    std::vector<Coloring> result;
    std::vector<int> assigned(n, 0);
    // assigns vertices in id order; partial colorings are checked against
    // earlier neighbors only, which yields lexicographic output
    auto proper_so_far = [&](int v, int color) {
        for (int w : g.neighbors(v)) {
            if (w >= v) break;
            if (assigned[w] == color) return false;
        }
        return true;
    };
    std::vector<std::size_t> choice(n, 0);
    int v = 0;
    if (n == 0) {
        result.push_back(Coloring{{}, k});
        return result;
    }
    while (v >= 0) {
        if (choice[v] == palette[v].size()) {
            choice[v] = 0;
            --v;
            if (v >= 0) ++choice[v];
            continue;
        }
        const int color = palette[v][choice[v]];
        if (!proper_so_far(v, color)) {
            ++choice[v];
            continue;
        }
        assigned[v] = color;
        if (v == n - 1) {
            result.push_back(Coloring{assigned, k});
            ++choice[v];
        } else {
            ++v;
        }
    }
    return result;
}

std::size_t ReconfigGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nb : adj) total += nb.size();
    return total / 2;
}

ReconfigGraph build_reconfig_graph(const Graph& g, const std::vector<Coloring>& colorings,
                                   Relation relation) {
    ReconfigGraph rg;
    rg.nodes = colorings;
    rg.relation = relation;
    rg.adj.assign(colorings.size(), {});

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < colorings.size(); ++i)
        index[colorings[i].colors] = static_cast<int>(i);

    const int k = colorings.empty() ? 0 : colorings.front().palette_size;
    std::set<std::pair<int, int>> edges;
    auto connect = [&](int i, const std::vector<int>& candidate) {
        auto it = index.find(candidate);
        if (it == index.end() || it->second == i) return;
        edges.emplace(std::min(i, it->second), std::max(i, it->second));
    };

    for (std::size_t i = 0; i < colorings.size(); ++i) {
        const std::vector<int>& col = colorings[i].colors;
        if (relation == Relation::elementary) {
            for (int v = 0; v < g.vertex_count; ++v)
                for (int color = 1; color <= k; ++color) {
                    if (color == col[v]) continue;
                    std::vector<int> candidate = col;
                    candidate[v] = color;
                    connect(static_cast<int>(i), candidate);
                }
        } else {
            // enumerate color pairs and sweep each Kempe-component once
            std::vector<char> seen(g.vertex_count, 0);
            for (int a = 1; a <= k; ++a)
                for (int b = a + 1; b <= k; ++b) {
                    std::fill(seen.begin(), seen.end(), 0);
                    for (int v = 0; v < g.vertex_count; ++v) {
                        if (seen[v] || (col[v] != a && col[v] != b)) continue;
                        std::vector<int> component, stack{v};
                        seen[v] = 1;
                        while (!stack.empty()) {
                            int u = stack.back();
                            stack.pop_back();
                            component.push_back(u);
                            for (int w : g.neighbors(u)) {
                                if (seen[w] || (col[w] != a && col[w] != b)) continue;
                                seen[w] = 1;
                                stack.push_back(w);
                            }
                        }
                        std::vector<int> candidate = col;
                        for (int u : component) candidate[u] = candidate[u] == a ? b : a;
                        connect(static_cast<int>(i), candidate);
                    }
                }
        }
    }
    for (const auto& [u, v] : edges) {
        rg.adj[u].push_back(v);
        rg.adj[v].push_back(u);
    }
    for (auto& nb : rg.adj) std::sort(nb.begin(), nb.end());
    return rg;
}

ConnectivityReport connectivity(const ReconfigGraph& rg) {
    ConnectivityReport report;
    const int n = static_cast<int>(rg.nodes.size());
    if (n == 0) return report;

    std::vector<int> component(n, -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (component[start] >= 0) continue;
        component[start] = components;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : rg.adj[v])
                if (component[w] < 0) {
                    component[w] = components;
                    queue.push_back(w);
                }
        }
        ++components;
    }
    report.component_count = components;
    report.connected = components == 1;
    if (!report.connected) return report;

    int diameter = 0;
    std::vector<int> dist(n);
    for (int start = 0; start < n; ++start) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            diameter = std::max(diameter, dist[v]);
            for (int w : rg.adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
    }
    report.diameter = diameter;
    return report;
}

int exact_subdeg(const Graph& g, const std::vector<int>& fixed, int max_vertices) {
    const int n = g.vertex_count;
    if (n > max_vertices)
        throw input_error("exact subdegeneracy refused: " + std::to_string(n) +
                          " vertices exceeds the cap of " + std::to_string(max_vertices));
    std::vector<char> is_fixed(n, 0);
    for (int v : fixed) {
        if (v < 0 || v >= n)
            throw contract_error("fixed vertex " + std::to_string(v) + " out of range");
        is_fixed[v] = 1;
    }
    std::vector<unsigned> nb(n, 0), fixed_nb(n, 0), free_nb(n, 0);
    unsigned fixed_bits = 0;
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) nb[v] |= 1u << w;
        if (is_fixed[v]) fixed_bits |= 1u << v;
    }
    for (int v = 0; v < n; ++v) {
        fixed_nb[v] = nb[v] & fixed_bits;
        free_nb[v] = nb[v] & ~fixed_bits;
    }

    const int infinity = std::numeric_limits<int>::max();
    const unsigned full = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1);
    std::vector<int> best(full + 1u, infinity);
    best[0] = 0;
    for (unsigned s = 0; s <= full; ++s) {
        if (best[s] == infinity) continue;
        if (s == full) break;
        for (int v = 0; v < n; ++v) {
            const unsigned bit = 1u << v;
            if (s & bit) continue;
            int cost = 0;
            if (!is_fixed[v]) {
                // placing v after prefix s is legal only if either no free
                // neighbor precedes it or all fixed neighbors already do
                if ((free_nb[v] & s) != 0 && (fixed_nb[v] & ~s) != 0) continue;
                cost = std::popcount(nb[v] & s);
            }
            const int candidate = std::max(best[s], cost);
            if (candidate < best[s | bit]) best[s | bit] = candidate;
        }
    }
    return n == 0 ? 0 : best[full];
}

BlockOrderTable block_order_enumerate(const ReducedGraph& reduced,
                                      const std::vector<CliqueBlock>& blocks,
                                      const std::vector<int>& fixed) {
    const Graph& g = reduced.graph;
    std::vector<char> is_fixed(g.vertex_count, 0);
    for (int v : fixed) is_fixed[v] = 1;

    std::vector<int> block_of(g.vertex_count, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].vertices.empty())
            throw input_error("block '" + blocks[b].name + "' is empty");
        for (int v : blocks[b].vertices) {
            if (v < 0 || v >= g.vertex_count || is_fixed[v] || block_of[v] >= 0)
                throw input_error("block '" + blocks[b].name +
                                  "' is not part of a partition of the non-fixed vertices");
            block_of[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (!is_fixed[v] && block_of[v] < 0)
            throw input_error("non-fixed vertex " + std::to_string(v) +
                              " is missing from the blocks");

    // every block must be a clique whose members look identical from outside
    const int nblocks = static_cast<int>(blocks.size());
    std::vector<int> fixed_degree(nblocks, 0);
    std::vector<std::vector<char>> block_adjacent(nblocks, std::vector<char>(nblocks, 0));
    for (int b = 0; b < nblocks; ++b) {
        const auto& members = blocks[b].vertices;
        std::set<int> reference;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!g.has_edge(members[i], members[j]))
                    throw input_error("block '" + blocks[b].name +
                                      "' does not induce a clique");
            std::set<int> outside;
            for (int w : g.neighbors(members[i]))
                if (block_of[w] != b) outside.insert(w);
            if (i == 0)
                reference = outside;
            else if (outside != reference)
                throw input_error("block '" + blocks[b].name +
                                  "' has members with different outside neighborhoods");
        }
        for (int w : reference) {
            if (is_fixed[w])
                ++fixed_degree[b];
            else
                block_adjacent[b][block_of[w]] = 1;
        }
    }
    if (nblocks > 8) throw input_error("too many blocks to enumerate every order");

    BlockOrderTable table;
    table.blocks = blocks;
    table.minimum = std::numeric_limits<int>::max();
    std::vector<int> order(nblocks);
    for (int b = 0; b < nblocks; ++b) order[b] = b;
    std::sort(order.begin(), order.end());
    do {
        BlockOrderRow row;
        row.order = order;
        row.pred_values.assign(nblocks, 0);
        for (int t = 0; t < nblocks; ++t) {
            const int b = order[t];
            int pred = static_cast<int>(blocks[b].vertices.size()) - 1 + fixed_degree[b];
            for (int s = 0; s < t; ++s)
                if (block_adjacent[b][order[s]])
                    pred += static_cast<int>(blocks[order[s]].vertices.size());
            row.pred_values[b] = pred;
        }
        row.row_max = *std::max_element(row.pred_values.begin(), row.pred_values.end());
        table.minimum = std::min(table.minimum, row.row_max);
        table.rows.push_back(std::move(row));
    } while (std::next_permutation(order.begin(), order.end()));
    return table;
}

void write_reconfig_edges(std::ostream& out, const ReconfigGraph& rg) {
    out << "p edge " << rg.nodes.size() << ' ' << rg.edge_count() << '\n';
    for (std::size_t u = 0; u < rg.adj.size(); ++u)
        for (int v : rg.adj[u])
            if (static_cast<int>(u) < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_reconfig_nodes(std::ostream& out, const ReconfigGraph& rg) {
    for (const Coloring& c : rg.nodes) {
        for (std::size_t v = 0; v < c.colors.size(); ++v) {
            if (v) out << ' ';
            out << c.colors[v];
        }
        out << '\n';
    }
}

} // namespace kempe
