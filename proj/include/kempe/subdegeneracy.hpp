#pragma once

#include <string>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Outcome of the subdegeneracy heuristic: an ordering satisfying the
/// fixed-set ordering condition together with the bound it witnesses.
struct SubdegResult {
    int value = 0;        // max pred over the non-fixed vertices; upper bound on subdeg(F,G)
    VertexOrdering ordering; // full ordering of V(G); passes check_sprime
    int lambda_value = 0; // value before the independent-prefix move
    int moved_prefix = 0; // number of elimination-order vertices moved before F
};

/// Min-degree elimination restricted to the non-fixed vertices. Fixed vertices
/// are never removed but keep contributing to degrees. Returns the ordering of
/// the non-fixed vertices in reverse removal order; prefixing the fixed set
/// yields an ordering whose max pred over non-fixed vertices is lambda(F,G).
std::vector<int> vertex_elimination(const Graph& g, const std::vector<int>& fixed);

/// True iff the ordering satisfies the condition: whenever a non-fixed vertex v
/// has a non-fixed neighbor preceding it, every fixed neighbor of v precedes v.
/// The ordering must cover all vertices.
bool check_sprime(const Graph& g, const std::vector<int>& fixed, const VertexOrdering& order);

/// Moves the longest independent prefix of the elimination ordering in front of
/// the fixed set. tail must be a vertex_elimination output.
SubdegResult postprocess(const Graph& g, const std::vector<int>& fixed,
                         const std::vector<int>& tail);

/// vertex_elimination followed by postprocess.
SubdegResult subdeg_ub(const Graph& g, const std::vector<int>& fixed);

/// "subdeg_ub <v> lambda <v> prefix <n>" plus the ordering on one line, 1-based.
std::string format_subdeg(const SubdegResult& result);

} // namespace kempe
