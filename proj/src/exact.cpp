#include "cc/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cc {

namespace {

void descend(const SignedGraph& g, std::vector<int>& labels, int i,
             int next_free, std::int64_t partial, std::int64_t& best,
             std::vector<int>& best_labels) {
  const int n = g.size();
  if (i == n) {
    if (best < 0 || partial < best) {
      best = partial;
      best_labels = labels;
    }
    return;
  }
  std::vector<std::int64_t> neg_to(static_cast<std::size_t>(next_free), 0);
  std::vector<std::int64_t> pos_to(static_cast<std::size_t>(next_free), 0);
  std::int64_t total_pos = 0;
  for (int j = 0; j < i; ++j) {
    if (g.positive(j, i)) {
      ++total_pos;
      ++pos_to[labels[j]];
    } else {
      ++neg_to[labels[j]];
    }
  }
  for (int l = 0; l <= next_free; ++l) {
    const std::int64_t step = (l < next_free)
                                  ? neg_to[l] + (total_pos - pos_to[l])
                                  : total_pos;
    const std::int64_t cost = partial + step;
    if (best >= 0 && cost >= best) continue;
    labels[i] = l;
    descend(g, labels, i + 1, l == next_free ? next_free + 1 : next_free, cost,
            best, best_labels);
  }
}

}  // namespace

ExactResult exact_opt(const SignedGraph& g, int max_n) {
  if (max_n < 1) {
    throw std::invalid_argument("exact_opt: max_n " + std::to_string(max_n) +
                                " must be at least 1");
  }
  if (g.size() > max_n) {
    throw std::invalid_argument(
        "exact_opt: refusing n=" + std::to_string(g.size()) +
        " (limit max_n=" + std::to_string(max_n) +
        "; partition count grows as the Bell numbers)");
  }
  std::vector<int> labels(static_cast<std::size_t>(g.size()), -1);
  std::vector<int> best_labels;
  std::int64_t best = -1;
  descend(g, labels, 0, 0, 0, best, best_labels);
  Clustering c = Clustering::from_labels(best_labels);
  CostBreakdown cost = disagreement_cost(g, c);
  return ExactResult{std::move(c), cost};
}

}  // namespace cc
