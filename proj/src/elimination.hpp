#pragma once

#include <vector>

#include "kempe/graph.hpp"

namespace kempe::detail {

// Repeatedly removes the minimum-degree removable vertex (smallest id on ties).
// Non-removable vertices stay in the graph and keep contributing to degrees.
// Returns the removal sequence; max_removal_degree gets the largest degree seen
// at removal time, which is the degeneracy when everything is removable.
std::vector<int> eliminate_min_degree(const Graph& g, const std::vector<char>& removable,
                                      int& max_removal_degree);

} // namespace kempe::detail
