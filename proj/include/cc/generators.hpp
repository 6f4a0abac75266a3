#pragma once

#include <cstdint>

#include "cc/signed_graph.hpp"

namespace cc {

struct PlantedInstance {
  SignedGraph graph;
  Clustering planted;
};

// k near-equal contiguous clusters (the first n%k clusters get the extra
// vertex), agreement labels, then each pair label flipped independently with
// probability flip_prob. Pairs are visited in ascending (v, u<v) order with
// one uniform draw each, so the instance is a pure function of the arguments.
PlantedInstance gen_planted(int n, int k, double flip_prob, std::uint64_t seed);

// leaves+1 vertices; vertex 0 is the center, {0,v} positive for every leaf v,
// all leaf pairs negative
SignedGraph gen_gap_star(int leaves);

// all pairs positive except {0,1}
SignedGraph gen_single_negative_edge(int n);

}  // namespace cc
