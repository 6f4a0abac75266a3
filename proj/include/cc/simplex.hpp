#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cc {

// Minimize c.x over box l <= x <= u subject to sparse rows a_i . x >= rhs_i.
//
// Bounded-variable primal simplex. Every solve starts from a caller-supplied
// assignment of variables to their bounds that already satisfies all rows, so
// no phase-1 is needed. Basic slack variables occupy unit columns, which
// leaves a k x k kernel (tight rows x basic structural columns) as the only
// dense linear algebra; its inverse is kept explicitly and maintained with
// rank-one updates plus periodic refactorization.
//
// Pivoting is deterministic: most-attractive reduced cost with least-index
// tie-break, switching to pure least-index (Bland) selection after a run of
// degenerate steps so that termination is guaranteed.

struct SimplexRow {
  std::vector<std::pair<int, double>> terms;  // (column, coefficient)
  double rhs = 0.0;
};

enum class SimplexStatus { optimal, pivot_limit };

struct SimplexOptions {
  double rc_tol = 1e-9;          // reduced-cost optimality threshold
  std::int64_t max_pivots = -1;  // < 0 means unlimited
  int refactor_every = 64;
  int stall_limit = 500;  // degenerate pivots tolerated before Bland mode
};

struct SimplexResult {
  SimplexStatus status = SimplexStatus::optimal;
  double objective = 0.0;
  std::vector<double> x;
  std::int64_t pivots = 0;
};

class BoundedSimplex {
 public:
  BoundedSimplex(std::vector<double> cost, std::vector<double> lower,
                 std::vector<double> upper);

  void add_row(SimplexRow row);
  int row_count() const { return static_cast<int>(rows_.size()); }
  int var_count() const { return static_cast<int>(cost_.size()); }

  // start_at_upper[j] picks the initial bound of variable j; the resulting
  // point must satisfy every row
  SimplexResult solve(const std::vector<bool>& start_at_upper,
                      const SimplexOptions& opt = {}) const;

 private:
  std::vector<double> cost_, lower_, upper_;
  std::vector<SimplexRow> rows_;
  std::vector<std::vector<int>> col_rows_;  // rows mentioning each column
};

}  // namespace cc
