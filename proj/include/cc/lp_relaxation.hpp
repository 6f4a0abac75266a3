#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cc/fractional_metric.hpp"
#include "cc/signed_graph.hpp"

namespace cc {

struct LpOptions {
  double feas_tol = 1e-7;  // max allowed triangle violation at termination
  double opt_tol = 1e-6;   // objective tolerance of the simplex
  int max_rounds = 500;
  std::int64_t max_pivots = -1;  // total across rounds; < 0 unlimited
  bool parallel_separation = true;
};

struct LpSolution {
  FractionalMetric metric;
  double value = 0.0;       // objective recomputed from the metric
  int rounds = 0;           // solve/separate cycles performed
  std::int64_t pivots = 0;  // simplex pivots across all rounds
  int constraints_used = 0;
  std::vector<int> rows_per_round;  // row count after each round's additions
  double max_violation = 0.0;       // worst triangle violation at termination
};

// separation budget exhausted; carries the best bound pair seen so far
class LpBudgetError : public std::runtime_error {
 public:
  LpBudgetError(const std::string& message, double best_value, double max_violation)
      : std::runtime_error(message),
        best_value(best_value),
        max_violation(max_violation) {}
  double best_value;
  double max_violation;
};

// Minimize sum over positive pairs of x_uv plus sum over negative pairs of
// 1 - x_uv, over x in [0,1] satisfying all triangle inequalities.
//
// Solved by bounded-variable primal simplex over the n(n-1)/2 pair variables
// with lazy constraint generation: start from the box alone, then each round
// scan all triples, add the 10*n most violated triangle rows (ordered by
// violation, ties by triple index) and re-solve, until the worst violation is
// at most feas_tol. Deterministic: repeated runs return identical metrics.
LpSolution solve_relaxation(const SignedGraph& g, const LpOptions& opt = {});

// one violated-triangle candidate: constraint x_long <= x_a + x_b
struct TriangleCut {
  long long id;  // deterministic tie-break key
  double violation;
  int e_long, e_a, e_b;  // pair indices
};

struct SeparationResult {
  // candidates with violation > tol, sorted by (violation desc, id asc)
  std::vector<TriangleCut> cuts;
  // worst violation over every triple, even when below tol
  double max_violation = 0.0;
};

// scan all triples of the pair values `x` (indexed by triangular pair index);
// serial and parallel paths return identical results in identical order
SeparationResult separate_triangles(int n, const std::vector<double>& x,
                                    double tol, bool parallel);

}  // namespace cc
