#pragma once

#include <cstdint>
#include <vector>

#include "cc/fractional_metric.hpp"
#include "cc/signed_graph.hpp"

namespace cc {

// Distance-to-probability shaping for pivot rounding. On a positive pair the
// join probability is 1 - f_plus(x); on a negative pair it is 1 - f_minus(x).
// f_minus is always the identity. f_plus is 0 below a, 1 above b and
// ((x-a)/(b-a))^2 in between; the identity configuration overrides it to x.
struct RoundingFunctions {
  double a = 0.19;
  double b = 0.5095;
  bool plus_identity = false;

  static RoundingFunctions quadratic() { return RoundingFunctions{0.19, 0.5095, false}; }
  static RoundingFunctions identity() { return RoundingFunctions{0.0, 1.0, true}; }

  void validate() const;
  double f_plus(double x) const;   // domain [0,1]
  double f_minus(double x) const;  // domain [0,1]
};

// Uniform-random pivot; the cluster is the pivot plus all still-active
// positive neighbors. Cluster ids follow creation order.
Clustering kwik_cluster(const SignedGraph& g, std::uint64_t seed);

// Ball rounding of a feasible metric: around a random pivot p take
// S = { v active : x_pv <= 1/2 } minus p; keep the ball when the average
// pivot distance in S is at most 1/4, otherwise emit {p} alone.
Clustering cgw_round(const SignedGraph& g, const FractionalMetric& m,
                     std::uint64_t seed, double feas_tol = 1e-7);

// Independent-join rounding of a feasible metric: around a random pivot each
// active vertex joins independently with probability 1 - f(x_pv), where f is
// f_plus on positive pairs and f_minus on negative pairs.
Clustering cmsy_round(const SignedGraph& g, const FractionalMetric& m,
                      const RoundingFunctions& fns, std::uint64_t seed,
                      double feas_tol = 1e-7);

// per-step record for the trace variants: the pivot and the cluster carved
// off at that step, in creation order
struct PivotStep {
  int pivot;
  std::vector<int> cluster;  // ascending, includes the pivot unless removed
};

struct PivotTrace {
  Clustering clustering;
  std::vector<PivotStep> steps;
};

PivotTrace kwik_cluster_trace(const SignedGraph& g, std::uint64_t seed);
PivotTrace cgw_round_trace(const SignedGraph& g, const FractionalMetric& m,
                           std::uint64_t seed, double feas_tol = 1e-7);
PivotTrace cmsy_round_trace(const SignedGraph& g, const FractionalMetric& m,
                            const RoundingFunctions& fns, std::uint64_t seed,
                            double feas_tol = 1e-7);

}  // namespace cc
