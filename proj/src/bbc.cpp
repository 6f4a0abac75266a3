#include "cc/bbc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cc/rng.hpp"

namespace cc {

namespace {
// slack for comparing integer counts against delta-scaled set sizes, so that
// exact boundary cases do not flip on the last ulp of delta*|C|
constexpr double kCountTol = 1e-9;
}  // namespace

void BbcParams::validate() const {
  if (!(delta > 0.0 && delta <= 1.0 / 44.0)) {
    throw std::invalid_argument("BbcParams: delta " + std::to_string(delta) +
                                " outside (0, 1/44]");
  }
}

bool is_delta_good(const SignedGraph& g, int v, const std::vector<int>& cluster,
                   double delta) {
  if (cluster.empty()) {
    throw std::invalid_argument("is_delta_good: empty cluster");
  }
  if (v < 0 || v >= g.size()) {
    throw std::out_of_range("is_delta_good: vertex " + std::to_string(v) +
                            " outside [0," + std::to_string(g.size()) + ")");
  }
  std::vector<char> in_cluster(static_cast<std::size_t>(g.size()), 0);
  for (int u : cluster) {
    if (u < 0 || u >= g.size()) {
      throw std::out_of_range("is_delta_good: cluster vertex " +
                              std::to_string(u) + " outside [0," +
                              std::to_string(g.size()) + ")");
    }
    if (in_cluster[u]) {
      throw std::invalid_argument("is_delta_good: duplicate cluster vertex " +
                                  std::to_string(u));
    }
    in_cluster[u] = 1;
  }
  int inside = 0;
  int outside = 0;
  for (int u = 0; u < g.size(); ++u) {
    const bool pos = (u == v) || g.positive(v, u);
    if (!pos) continue;
    if (in_cluster[u]) {
      ++inside;
    } else {
      ++outside;
    }
  }
  const double csize = static_cast<double>(cluster.size());
  return inside + kCountTol >= (1.0 - delta) * csize &&
         outside <= delta * csize + kCountTol;
}

bool is_delta_clean(const SignedGraph& g, const std::vector<int>& cluster,
                    double delta) {
  if (cluster.empty()) {
    throw std::invalid_argument("is_delta_clean: empty cluster");
  }
  for (int v : cluster) {
    if (!is_delta_good(g, v, cluster, delta)) return false;
  }
  return true;
}

Clustering clean_up(const SignedGraph& g, const Clustering& c, double delta) {
  if (c.size() != g.size()) {
    throw std::invalid_argument("clean_up: clustering size " +
                                std::to_string(c.size()) + " != graph size " +
                                std::to_string(g.size()));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("clean_up: delta " + std::to_string(delta) +
                                " outside (0,1)");
  }
  const double third = delta / 3.0;
  std::vector<std::vector<int>> cores;
  std::vector<int> loose;
  for (const std::vector<int>& cluster : c.clusters()) {
    std::vector<int> bad;
    for (int v : cluster) {
      if (!is_delta_good(g, v, cluster, third)) bad.push_back(v);
    }
    const bool dissolve = static_cast<double>(bad.size()) >=
                          third * static_cast<double>(cluster.size()) - kCountTol;
    if (dissolve) {
      loose.insert(loose.end(), cluster.begin(), cluster.end());
      continue;
    }
    std::vector<int> core;
    std::size_t bi = 0;
    for (int v : cluster) {  // cluster and bad share ascending order
      if (bi < bad.size() && bad[bi] == v) {
        ++bi;
        loose.push_back(v);
      } else {
        core.push_back(v);
      }
    }
    cores.push_back(std::move(core));
  }
  std::sort(loose.begin(), loose.end());
  std::vector<int> assignment(static_cast<std::size_t>(g.size()), -1);
  int next = 0;
  for (const std::vector<int>& core : cores) {
    for (int v : core) assignment[v] = next;
    ++next;
  }
  for (int v : loose) assignment[v] = next++;
  return Clustering(std::move(assignment), next);
}

Clustering bbc_cautious(const SignedGraph& g, const BbcParams& params,
                        std::uint64_t seed) {
  params.validate();
  const int n = g.size();
  const double remove_delta = 3.0 * params.delta;
  const double add_delta = 7.0 * params.delta;
  Rng rng(seed);
  std::vector<char> active(static_cast<std::size_t>(n), 1);
  std::vector<char> parked(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> clusters;
  std::vector<int> candidates;
  while (true) {
    candidates.clear();
    for (int v = 0; v < n; ++v) {
      if (active[v] && !parked[v]) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    const int pivot = candidates[rng.uniform_below(candidates.size())];

    std::vector<int> a;
    for (int u = 0; u < n; ++u) {
      if (active[u] && (u == pivot || g.positive(pivot, u))) a.push_back(u);
    }
    // peel 3delta-bad members, least index first, goodness re-checked after
    // every removal
    while (!a.empty()) {
      std::size_t bad_at = a.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!is_delta_good(g, a[i], a, remove_delta)) {
          bad_at = i;
          break;
        }
      }
      if (bad_at == a.size()) break;
      a.erase(a.begin() + static_cast<std::ptrdiff_t>(bad_at));
    }
    if (a.empty()) {
      parked[pivot] = 1;
      continue;
    }
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (int u : a) in_a[u] = 1;
    for (int y = 0; y < n; ++y) {
      if (!active[y] || in_a[y]) continue;
      if (is_delta_good(g, y, a, add_delta)) in_a[y] = 1;
    }
    std::vector<int> grown;
    for (int u = 0; u < n; ++u) {
      if (in_a[u]) grown.push_back(u);
    }
    for (int u : grown) {
      active[u] = 0;
      parked[u] = 0;  // an absorbed parked vertex is no longer a singleton
    }
    clusters.push_back(std::move(grown));
  }
  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (const std::vector<int>& cluster : clusters) {
    for (int v : cluster) assignment[v] = next;
    ++next;
  }
  for (int v = 0; v < n; ++v) {
    if (active[v]) assignment[v] = next++;
  }
  return Clustering(std::move(assignment), next);
}

}  // namespace cc
