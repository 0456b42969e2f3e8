#pragma once

#include "kempe/graph.hpp"

namespace kempe {

struct DegeneracyResult {
    int value = 0;
    VertexOrdering ordering; // covers all vertices; max pred equals value
};

/// Degeneracy by repeated removal of a minimum-degree vertex (bucket queue).
/// Ties break toward the smallest vertex id, so the witness is deterministic.
DegeneracyResult degeneracy(const Graph& g);

} // namespace kempe
