#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace cc {

enum class Sign : std::uint8_t { positive = 0, negative = 1 };

// Complete signed graph on n >= 1 vertices: every unordered pair {u,v} carries
// exactly one label. Labels never change after construction; generators and
// parsers build new graphs. The positive neighborhood N+(u) contains u itself.
class SignedGraph {
 public:
  // all pairs positive
  explicit SignedGraph(int n);
  // labels indexed by pair_index(u,v)
  SignedGraph(int n, std::vector<Sign> pair_labels);
  static SignedGraph from_negative_pairs(
      int n, const std::vector<std::pair<int, int>>& negative_pairs);

  int size() const { return n_; }
  std::size_t pair_count() const { return labels_.size(); }

  Sign label(int u, int v) const;
  bool positive(int u, int v) const { return label(u, v) == Sign::positive; }
  std::int64_t positive_count() const;
  std::int64_t negative_count() const;

  // includes u itself, ascending
  std::vector<int> positive_neighborhood(int u) const;
  // excludes u, ascending
  std::vector<int> negative_neighborhood(int u) const;

  // triangular index of an unordered pair, u != v, both in [0,n)
  std::size_t pair_index(int u, int v) const;

 private:
  int n_;
  std::vector<Sign> labels_;
  void check_vertex(int u) const;
};

// Partition of {0,...,n-1} into clusters with dense ids 0..k-1, each id used.
class Clustering {
 public:
  Clustering(std::vector<int> assignment, int k);
  // relabels arbitrary labels to dense ids in first-occurrence order
  static Clustering from_labels(const std::vector<int>& labels);
  static Clustering singletons(int n);
  static Clustering single_cluster(int n);

  int size() const { return static_cast<int>(assignment_.size()); }
  int cluster_count() const { return k_; }
  int cluster_of(int v) const;
  const std::vector<int>& assignment() const { return assignment_; }
  std::vector<std::vector<int>> clusters() const;

  // equality as partitions, ignoring cluster id order
  bool same_partition(const Clustering& other) const;

 private:
  std::vector<int> assignment_;
  int k_;
};

struct CostBreakdown {
  std::int64_t positive_mistakes = 0;  // positive pairs split across clusters
  std::int64_t negative_mistakes = 0;  // negative pairs inside a cluster
  std::int64_t total() const { return positive_mistakes + negative_mistakes; }
};

CostBreakdown disagreement_cost(const SignedGraph& g, const Clustering& c);

// triples u<v<w with exactly two positive pairs and one negative pair,
// in ascending lexicographic order
std::vector<std::array<int, 3>> enumerate_bad_triangles(const SignedGraph& g);

}  // namespace cc
