#include "cc/signed_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cc {

SignedGraph::SignedGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SignedGraph: n must be >= 1");
  labels_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, Sign::positive);
}

SignedGraph::SignedGraph(int n, std::vector<Sign> pair_labels) : n_(n) {
  if (n < 1) throw std::invalid_argument("SignedGraph: n must be >= 1");
  const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (pair_labels.size() != want) {
    throw std::invalid_argument(
        "SignedGraph: expected " + std::to_string(want) + " pair labels, got " +
        std::to_string(pair_labels.size()));
  }
  labels_ = std::move(pair_labels);
}

SignedGraph SignedGraph::from_negative_pairs(
    int n, const std::vector<std::pair<int, int>>& negative_pairs) {
  SignedGraph g(n);
  for (const auto& [u, v] : negative_pairs) {
    g.labels_[g.pair_index(u, v)] = Sign::negative;
  }
  return g;
}

void SignedGraph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw std::out_of_range("SignedGraph: vertex " + std::to_string(u) +
                            " out of range [0," + std::to_string(n_) + ")");
  }
}

std::size_t SignedGraph::pair_index(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("SignedGraph: pair {" + std::to_string(u) +
                                "," + std::to_string(v) + "} is not an edge");
  }
  const int a = std::min(u, v);
  const int b = std::max(u, v);
  return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
}

Sign SignedGraph::label(int u, int v) const { return labels_[pair_index(u, v)]; }

std::int64_t SignedGraph::negative_count() const {
  return std::count(labels_.begin(), labels_.end(), Sign::negative);
}

std::int64_t SignedGraph::positive_count() const {
  return static_cast<std::int64_t>(labels_.size()) - negative_count();
}

std::vector<int> SignedGraph::positive_neighborhood(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (v == u || positive(u, v)) out.push_back(v);
  }
  return out;
}

std::vector<int> SignedGraph::negative_neighborhood(int u) const {
  check_vertex(u);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (v != u && !positive(u, v)) out.push_back(v);
  }
  return out;
}

Clustering::Clustering(std::vector<int> assignment, int k)
    : assignment_(std::move(assignment)), k_(k) {
  if (assignment_.empty()) throw std::invalid_argument("Clustering: empty assignment");
  if (k < 1) throw std::invalid_argument("Clustering: k must be >= 1");
  std::vector<char> used(static_cast<std::size_t>(k), 0);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    const int c = assignment_[v];
    if (c < 0 || c >= k) {
      throw std::invalid_argument("Clustering: vertex " + std::to_string(v) +
                                  " has cluster id " + std::to_string(c) +
                                  " outside [0," + std::to_string(k) + ")");
    }
    used[c] = 1;
  }
  for (int c = 0; c < k; ++c) {
    if (!used[c]) {
      throw std::invalid_argument("Clustering: cluster id " + std::to_string(c) +
                                  " unused; ids must be dense");
    }
  }
}

Clustering Clustering::from_labels(const std::vector<int>& labels) {
  std::vector<int> assignment(labels.size());
  std::vector<std::pair<int, int>> seen;  // (label, dense id)
  int next = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    int id = -1;
    for (const auto& [lab, dense] : seen) {
      if (lab == labels[v]) { id = dense; break; }
    }
    if (id < 0) {
      id = next++;
      seen.emplace_back(labels[v], id);
    }
    assignment[v] = id;
  }
  return Clustering(std::move(assignment), next);
}

Clustering Clustering::singletons(int n) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) a[v] = v;
  return Clustering(std::move(a), n);
}

Clustering Clustering::single_cluster(int n) {
  return Clustering(std::vector<int>(static_cast<std::size_t>(n), 0), 1);
}

int Clustering::cluster_of(int v) const {
  if (v < 0 || v >= size()) {
    throw std::out_of_range("Clustering: vertex " + std::to_string(v) +
                            " out of range");
  }
  return assignment_[v];
}

std::vector<std::vector<int>> Clustering::clusters() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k_));
  for (int v = 0; v < size(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

bool Clustering::same_partition(const Clustering& other) const {
  if (size() != other.size()) return false;
  const Clustering a = from_labels(assignment_);
  const Clustering b = from_labels(other.assignment_);
  return a.assignment_ == b.assignment_;
}

CostBreakdown disagreement_cost(const SignedGraph& g, const Clustering& c) {
  if (g.size() != c.size()) {
    throw std::invalid_argument("disagreement_cost: graph has " +
                                std::to_string(g.size()) + " vertices, clustering " +
                                std::to_string(c.size()));
  }
  CostBreakdown out;
  for (int v = 1; v < g.size(); ++v) {
    for (int u = 0; u < v; ++u) {
      const bool together = c.cluster_of(u) == c.cluster_of(v);
      if (g.positive(u, v)) {
        if (!together) ++out.positive_mistakes;
      } else {
        if (together) ++out.negative_mistakes;
      }
    }
  }
  return out;
}

std::vector<std::array<int, 3>> enumerate_bad_triangles(const SignedGraph& g) {
  std::vector<std::array<int, 3>> out;
  const int n = g.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int w = v + 1; w < n; ++w) {
        const int positives = static_cast<int>(g.positive(u, v)) +
                              static_cast<int>(g.positive(u, w)) +
                              static_cast<int>(g.positive(v, w));
        if (positives == 2) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

}  // namespace cc
