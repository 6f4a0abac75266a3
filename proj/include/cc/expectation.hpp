#pragma once

#include "cc/fractional_metric.hpp"
#include "cc/rounding.hpp"
#include "cc/signed_graph.hpp"

namespace cc {

// Exact expected disagreement cost of kwik_cluster, by recursion over active
// vertex subsets with memoization (2^n states). Refuses n > max_n.
double kwik_expected_cost(const SignedGraph& g, int max_n = 6);

// Exact expected disagreement cost of cmsy_round on the given metric, by
// enumerating pivot choices and independent join outcomes at every step.
// Refuses n > max_n; the outcome tree is exponential in n.
double cmsy_expected_cost(const SignedGraph& g, const FractionalMetric& m,
                          const RoundingFunctions& fns, int max_n = 4,
                          double feas_tol = 1e-7);

}  // namespace cc
