#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/reduction.hpp"

namespace kempe {

/// Hard limits for the exhaustive searches. Exceeding a cap is a refusal with
/// a size estimate, never a silent truncation.
struct EnumerationCaps {
    int max_vertices = 8;
    int max_colors = 6;
};

/// Reads "<max_vertices>,<max_colors>" from the KEMPE_RECON_CAPS environment
/// variable; returns the defaults when it is unset.
EnumerationCaps caps_from_env();

/// All proper (list-)colorings with palette {1..k}, lexicographically ordered.
std::vector<Coloring> enumerate_colorings(const Graph& g, int k,
                                          const std::vector<std::vector<int>>* lists = nullptr,
                                          EnumerationCaps caps = {});

enum class Relation { elementary, kempe };

/// Reconfiguration graph over a fixed node set of colorings. Two nodes are
/// adjacent when one recoloring step maps one onto the other and both stay in
/// the node set.
struct ReconfigGraph {
    std::vector<Coloring> nodes; // canonical (lexicographic) order
    std::vector<std::vector<int>> adj;
    Relation relation = Relation::kempe;

    std::size_t edge_count() const;
};

ReconfigGraph build_reconfig_graph(const Graph& g, const std::vector<Coloring>& colorings,
                                   Relation relation);

struct ConnectivityReport {
    bool connected = false;
    int component_count = 0;
    std::optional<int> diameter; // only set when connected and nonempty
};

ConnectivityReport connectivity(const ReconfigGraph& rg);

/// Exact subdegeneracy by dynamic programming over vertex subsets; the
/// ordering condition is prefix-local, so each subset carries the best
/// achievable max-pred of any valid arrangement of it.
int exact_subdeg(const Graph& g, const std::vector<int>& fixed, int max_vertices = 10);

/// Named clique blocks of the non-fixed vertices, every block's members
/// sharing one outside neighborhood.
struct CliqueBlock {
    std::string name;
    std::vector<int> vertices;
};

struct BlockOrderRow {
    std::vector<int> order;       // block indices, position in the arrangement
    std::vector<int> pred_values; // per block, indexed like the block list
    int row_max = 0;
};

struct BlockOrderTable {
    std::vector<CliqueBlock> blocks;
    std::vector<BlockOrderRow> rows; // one per total order of the blocks
    int minimum = 0;                 // min over rows of row_max
};

/// Enumerates every total order of the blocks placed after the fixed set and
/// reports the max pred each block's last vertex would have. Refuses when the
/// blocks are not cliques with homogeneous outside neighborhoods, or do not
/// partition the non-fixed vertices.
BlockOrderTable block_order_enumerate(const ReducedGraph& reduced,
                                      const std::vector<CliqueBlock>& blocks,
                                      const std::vector<int>& fixed);

// Export: DIMACS-like edge list over node indices plus one coloring per line.
void write_reconfig_edges(std::ostream& out, const ReconfigGraph& rg);
void write_reconfig_nodes(std::ostream& out, const ReconfigGraph& rg);

} // namespace kempe
