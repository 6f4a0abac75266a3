#include "cc/generators.hpp"

#include <stdexcept>
#include <string>

#include "cc/rng.hpp"

namespace cc {

PlantedInstance gen_planted(int n, int k, double flip_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_planted: n must be >= 1");
  if (k < 1 || k > n) {
    throw std::invalid_argument("gen_planted: k must be in [1," +
                                std::to_string(n) + "], got " + std::to_string(k));
  }
  if (!(flip_prob >= 0.0 && flip_prob <= 1.0)) {
    throw std::invalid_argument("gen_planted: flip_prob must be in [0,1]");
  }

  // contiguous near-equal blocks; first n%k clusters take the extra vertex
  std::vector<int> assignment(static_cast<std::size_t>(n));
  const int base = n / k;
  const int extra = n % k;
  int v = 0;
  for (int c = 0; c < k; ++c) {
    const int size = base + (c < extra ? 1 : 0);
    for (int i = 0; i < size; ++i) assignment[v++] = c;
  }

  Rng rng(seed);
  std::vector<Sign> labels;
  labels.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) {
      const bool together = assignment[a] == assignment[b];
      Sign s = together ? Sign::positive : Sign::negative;
      if (rng.uniform_double() < flip_prob) {
        s = s == Sign::positive ? Sign::negative : Sign::positive;
      }
      labels.push_back(s);
    }
  }
  return PlantedInstance{SignedGraph(n, std::move(labels)),
                         Clustering(std::move(assignment), k)};
}

SignedGraph gen_gap_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("gen_gap_star: need at least one leaf");
  const int n = leaves + 1;
  std::vector<Sign> labels;
  labels.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) {
      labels.push_back(a == 0 ? Sign::positive : Sign::negative);
    }
  }
  return SignedGraph(n, std::move(labels));
}

SignedGraph gen_single_negative_edge(int n) {
  if (n < 2) throw std::invalid_argument("gen_single_negative_edge: n must be >= 2");
  return SignedGraph::from_negative_pairs(n, {{0, 1}});
}

}  // namespace cc
