#pragma once

#include "cc/signed_graph.hpp"

namespace cc {

struct ExactResult {
  Clustering clustering;
  CostBreakdown cost;
};

// Global minimum of disagreement_cost over every partition of the vertex set,
// found by depth-first enumeration of restricted growth strings with
// incremental-cost pruning. Ties resolve to the lexicographically least
// growth string. Refuses to run when g has more than max_n vertices.
ExactResult exact_opt(const SignedGraph& g, int max_n = 12);

}  // namespace cc
