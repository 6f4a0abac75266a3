#pragma once

#include <array>
#include <vector>

#include "cc/signed_graph.hpp"
#include "cc/simplex.hpp"

namespace cc {

// Fractional packing of bad triangles: weights r_T in [0,1], at most total
// weight 1 across the triangles sharing any pair. The total weight is a
// lower bound on the optimal disagreement cost, because any clustering makes
// at least one mistake inside every bad triangle and each mistake sits on a
// pair of capacity 1.
struct PackingBound {
  double value = 0.0;
  std::vector<std::array<int, 3>> triangles;  // ascending lex
  std::vector<double> weights;                // aligned with triangles
};

// maximum-value packing, solved exactly with all pair-capacity rows eager
PackingBound packing_lower_bound(const SignedGraph& g,
                                 const SimplexOptions& opt = {});

// worst per-pair total weight of the packing (0 when there are no triangles)
double packing_max_load(const SignedGraph& g, const PackingBound& bound);

}  // namespace cc
