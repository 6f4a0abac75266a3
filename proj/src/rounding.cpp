#include "cc/rounding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cc/rng.hpp"

namespace cc {

void RoundingFunctions::validate() const {
  if (!(a >= 0.0 && a < b && b <= 1.0)) {
    throw std::invalid_argument(
        "RoundingFunctions: need 0 <= a < b <= 1, got a=" + std::to_string(a) +
        " b=" + std::to_string(b));
  }
}

namespace {
void check_domain(double x, const char* fn) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(fn) + ": argument " +
                                std::to_string(x) + " outside [0,1]");
  }
}
}  // namespace

double RoundingFunctions::f_plus(double x) const {
  check_domain(x, "f_plus");
  if (plus_identity) return x;
  if (x < a) return 0.0;
  if (x > b) return 1.0;
  const double r = (x - a) / (b - a);
  return r * r;
}

double RoundingFunctions::f_minus(double x) const {
  check_domain(x, "f_minus");
  return x;
}

namespace {

void check_metric_input(const SignedGraph& g, const FractionalMetric& m,
                        double feas_tol, const char* who) {
  if (m.size() != g.size()) {
    throw std::invalid_argument(std::string(who) + ": metric size " +
                                std::to_string(m.size()) + " != graph size " +
                                std::to_string(g.size()));
  }
  const MetricCheck check = verify_metric(m, feas_tol);
  if (!check.feasible) {
    throw std::invalid_argument(std::string(who) +
                                ": metric infeasible (worst triangle violation " +
                                std::to_string(check.worst_triangle) + ")");
  }
}

Clustering finish(const SignedGraph& g, const std::vector<PivotStep>& steps) {
  std::vector<int> assignment(static_cast<std::size_t>(g.size()), -1);
  int next = 0;
  for (const PivotStep& s : steps) {
    for (int v : s.cluster) assignment[v] = next;
    ++next;
  }
  return Clustering(std::move(assignment), next);
}

}  // namespace

PivotTrace kwik_cluster_trace(const SignedGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> active(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) active[v] = v;
  std::vector<PivotStep> steps;
  while (!active.empty()) {
    const int pivot = active[rng.uniform_below(active.size())];
    PivotStep step;
    step.pivot = pivot;
    std::vector<int> rest;
    rest.reserve(active.size());
    for (int v : active) {
      if (v == pivot || g.positive(pivot, v)) {
        step.cluster.push_back(v);
      } else {
        rest.push_back(v);
      }
    }
    active.swap(rest);
    steps.push_back(std::move(step));
  }
  PivotTrace out{finish(g, steps), std::move(steps)};
  return out;
}

Clustering kwik_cluster(const SignedGraph& g, std::uint64_t seed) {
  return kwik_cluster_trace(g, seed).clustering;
}

PivotTrace cgw_round_trace(const SignedGraph& g, const FractionalMetric& m,
                           std::uint64_t seed, double feas_tol) {
  check_metric_input(g, m, feas_tol, "cgw_round");
  Rng rng(seed);
  std::vector<int> active(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) active[v] = v;
  std::vector<PivotStep> steps;
  while (!active.empty()) {
    const int pivot = active[rng.uniform_below(active.size())];
    std::vector<int> ball;
    double ball_sum = 0.0;
    for (int v : active) {
      if (v == pivot) continue;
      const double x = m.at(pivot, v);
      if (x <= 0.5) {
        ball.push_back(v);
        ball_sum += x;
      }
    }
    PivotStep step;
    step.pivot = pivot;
    const bool keep_ball =
        !ball.empty() && ball_sum / static_cast<double>(ball.size()) <= 0.25;
    if (keep_ball) {
      step.cluster = std::move(ball);
      step.cluster.push_back(pivot);
      std::sort(step.cluster.begin(), step.cluster.end());
    } else {
      step.cluster = {pivot};
    }
    std::vector<int> rest;
    rest.reserve(active.size());
    for (int v : active) {
      bool taken = false;
      for (int c : step.cluster) {
        if (c == v) { taken = true; break; }
      }
      if (!taken) rest.push_back(v);
    }
    active.swap(rest);
    steps.push_back(std::move(step));
  }
  PivotTrace out{finish(g, steps), std::move(steps)};
  return out;
}

Clustering cgw_round(const SignedGraph& g, const FractionalMetric& m,
                     std::uint64_t seed, double feas_tol) {
  return cgw_round_trace(g, m, seed, feas_tol).clustering;
}

PivotTrace cmsy_round_trace(const SignedGraph& g, const FractionalMetric& m,
                            const RoundingFunctions& fns, std::uint64_t seed,
                            double feas_tol) {
  fns.validate();
  check_metric_input(g, m, feas_tol, "cmsy_round");
  Rng rng(seed);
  std::vector<int> active(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) active[v] = v;
  std::vector<PivotStep> steps;
  while (!active.empty()) {
    const int pivot = active[rng.uniform_below(active.size())];
    PivotStep step;
    step.pivot = pivot;
    std::vector<int> rest;
    rest.reserve(active.size());
    for (int v : active) {
      if (v == pivot) {
        step.cluster.push_back(v);
        continue;
      }
      // one draw per active vertex in ascending order, drawn unconditionally
      // so the stream position never depends on the metric values
      const double u = rng.uniform_double();
      const double x = std::clamp(m.at(pivot, v), 0.0, 1.0);
      const double join =
          1.0 - (g.positive(pivot, v) ? fns.f_plus(x) : fns.f_minus(x));
      if (u < join) {
        step.cluster.push_back(v);
      } else {
        rest.push_back(v);
      }
    }
    active.swap(rest);
    steps.push_back(std::move(step));
  }
  PivotTrace out{finish(g, steps), std::move(steps)};
  return out;
}

Clustering cmsy_round(const SignedGraph& g, const FractionalMetric& m,
                      const RoundingFunctions& fns, std::uint64_t seed,
                      double feas_tol) {
  return cmsy_round_trace(g, m, fns, seed, feas_tol).clustering;
}

}  // namespace cc
