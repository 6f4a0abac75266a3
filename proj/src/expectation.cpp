#include "cc/expectation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace cc {

namespace {

void check_size(const SignedGraph& g, int max_n, const char* who) {
  if (max_n < 1) {
    throw std::invalid_argument(std::string(who) + ": max_n must be positive");
  }
  if (g.size() > max_n) {
    throw std::invalid_argument(std::string(who) + ": refusing n=" +
                                std::to_string(g.size()) + " (limit max_n=" +
                                std::to_string(max_n) + ")");
  }
}

// mistakes fixed when cluster cmask is carved out of the active set mask:
// negative pairs inside cmask plus positive pairs from cmask to the rest
double carve_cost(const SignedGraph& g, unsigned mask, unsigned cmask) {
  double cost = 0.0;
  for (int a = 0; a < g.size(); ++a) {
    if (!(mask & (1u << a))) continue;
    for (int b = a + 1; b < g.size(); ++b) {
      if (!(mask & (1u << b))) continue;
      const bool a_in = (cmask >> a) & 1u;
      const bool b_in = (cmask >> b) & 1u;
      if (a_in && b_in) {
        if (!g.positive(a, b)) cost += 1.0;
      } else if (a_in != b_in) {
        if (g.positive(a, b)) cost += 1.0;
      }
    }
  }
  return cost;
}

}  // namespace

double kwik_expected_cost(const SignedGraph& g, int max_n) {
  check_size(g, max_n, "kwik_expected_cost");
  const int n = g.size();
  std::vector<unsigned> pos_mask(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.positive_neighborhood(v)) pos_mask[v] |= 1u << u;
  }
  std::vector<double> memo(std::size_t{1} << n, -1.0);
  memo[0] = 0.0;
  // masks in increasing order only lose bits when a cluster is carved, so a
  // single ascending pass fills every reachable state before it is needed
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    double total = 0.0;
    for (int p = 0; p < n; ++p) {
      if (!(mask & (1u << p))) continue;
      const unsigned cmask = pos_mask[p] & mask;
      total += carve_cost(g, mask, cmask) + memo[mask & ~cmask];
    }
    memo[mask] = total / k;
  }
  return memo[(1u << n) - 1];
}

double cmsy_expected_cost(const SignedGraph& g, const FractionalMetric& m,
                          const RoundingFunctions& fns, int max_n,
                          double feas_tol) {
  check_size(g, max_n, "cmsy_expected_cost");
  fns.validate();
  if (m.size() != g.size()) {
    throw std::invalid_argument("cmsy_expected_cost: metric size mismatch");
  }
  const MetricCheck check = verify_metric(m, feas_tol);
  if (!check.feasible) {
    throw std::invalid_argument("cmsy_expected_cost: metric infeasible");
  }
  const int n = g.size();
  std::vector<double> join(static_cast<std::size_t>(n) * n, 0.0);
  for (int p = 0; p < n; ++p) {
    for (int v = 0; v < n; ++v) {
      if (v == p) continue;
      const double x = std::clamp(m.at(p, v), 0.0, 1.0);
      join[static_cast<std::size_t>(p) * n + v] =
          1.0 - (g.positive(p, v) ? fns.f_plus(x) : fns.f_minus(x));
    }
  }
  std::vector<double> memo(std::size_t{1} << n, -1.0);
  memo[0] = 0.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    double total = 0.0;
    for (int p = 0; p < n; ++p) {
      if (!(mask & (1u << p))) continue;
      std::vector<int> others;
      for (int v = 0; v < n; ++v) {
        if (v != p && (mask & (1u << v))) others.push_back(v);
      }
      const unsigned outcomes = 1u << others.size();
      double pivot_total = 0.0;
      for (unsigned o = 0; o < outcomes; ++o) {
        double prob = 1.0;
        unsigned cmask = 1u << p;
        for (std::size_t i = 0; i < others.size(); ++i) {
          const double q = join[static_cast<std::size_t>(p) * n + others[i]];
          if (o & (1u << i)) {
            prob *= q;
            cmask |= 1u << others[i];
          } else {
            prob *= 1.0 - q;
          }
        }
        if (prob == 0.0) continue;
        pivot_total += prob * (carve_cost(g, mask, cmask) + memo[mask & ~cmask]);
      }
      total += pivot_total;
    }
    memo[mask] = total / k;
  }
  return memo[(1u << n) - 1];
}

}  // namespace cc
