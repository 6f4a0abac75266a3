#include "cc/lp_relaxation.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "cc/simplex.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cc {

namespace {

inline int tri_index(int u, int v) {
  // unchecked triangular pair index, u != v
  const int a = u < v ? u : v;
  const int b = u < v ? v : u;
  return b * (b - 1) / 2 + a;
}

struct UBucket {
  std::vector<TriangleCut> cuts;
  double max_violation = 0.0;
};

void scan_u(int u, int n, const std::vector<double>& x, double tol, UBucket& out) {
  for (int v = u + 1; v < n; ++v) {
    const int euv = tri_index(u, v);
    const double xuv = x[euv];
    for (int w = v + 1; w < n; ++w) {
      const int euw = tri_index(u, w);
      const int evw = tri_index(v, w);
      const double xuw = x[euw];
      const double xvw = x[evw];
      const long long t =
          ((static_cast<long long>(u) * n + v) * n + w) * 3;
      const double v0 = xuv - xuw - xvw;  // long side uv
      const double v1 = xuw - xuv - xvw;  // long side uw
      const double v2 = xvw - xuv - xuw;  // long side vw
      if (v0 > out.max_violation) out.max_violation = v0;
      if (v1 > out.max_violation) out.max_violation = v1;
      if (v2 > out.max_violation) out.max_violation = v2;
      if (v0 > tol) out.cuts.push_back({t + 0, v0, euv, euw, evw});
      if (v1 > tol) out.cuts.push_back({t + 1, v1, euw, euv, evw});
      if (v2 > tol) out.cuts.push_back({t + 2, v2, evw, euv, euw});
    }
  }
}

}  // namespace

SeparationResult separate_triangles(int n, const std::vector<double>& x, double tol,
                                    bool parallel) {
  std::vector<UBucket> buckets(static_cast<std::size_t>(std::max(n - 2, 0)));
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int u = 0; u < n - 2; ++u) scan_u(u, n, x, tol, buckets[u]);
  } else {
    for (int u = 0; u < n - 2; ++u) scan_u(u, n, x, tol, buckets[u]);
  }
  SeparationResult out;
  std::size_t total = 0;
  for (const auto& b : buckets) total += b.cuts.size();
  out.cuts.reserve(total);
  for (auto& b : buckets) {
    out.max_violation = std::max(out.max_violation, b.max_violation);
    out.cuts.insert(out.cuts.end(), b.cuts.begin(), b.cuts.end());
  }
  std::sort(out.cuts.begin(), out.cuts.end(), [](const TriangleCut& a,
                                                 const TriangleCut& b) {
    if (a.violation != b.violation) return a.violation > b.violation;
    return a.id < b.id;
  });
  return out;
}

LpSolution solve_relaxation(const SignedGraph& g, const LpOptions& opt) {
  const int n = g.size();
  const int pairs = n * (n - 1) / 2;
  std::vector<double> cost(pairs), lower(pairs, 0.0), upper(pairs, 1.0);
  std::int64_t negatives = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const bool pos = g.positive(u, v);
      cost[tri_index(u, v)] = pos ? 1.0 : -1.0;
      if (!pos) ++negatives;
    }
  }
  BoundedSimplex lp(cost, lower, upper);
  const std::vector<bool> start(pairs, true);  // x = 1 satisfies every triangle row

  SimplexOptions sopt;
  sopt.rc_tol = std::clamp(opt.opt_tol * 1e-3, 1e-12, 1e-9);

  LpSolution sol{FractionalMetric(n), 0.0, 0, 0, 0, {}, 0.0};
  std::unordered_set<long long> added;
  const int per_round = 10 * n;

  for (;;) {
    if (opt.max_pivots >= 0) {
      sopt.max_pivots = opt.max_pivots - sol.pivots;
      if (sopt.max_pivots <= 0) {
        throw LpBudgetError("relaxation: pivot budget exhausted",
                            sol.value, sol.max_violation);
      }
    }
    const SimplexResult res = lp.solve(start, sopt);
    sol.pivots += res.pivots;
    ++sol.rounds;
    const double primal = res.objective + static_cast<double>(negatives);
    if (res.status == SimplexStatus::pivot_limit) {
      throw LpBudgetError("relaxation: pivot budget exhausted", primal,
                          sol.max_violation);
    }
    SeparationResult sep =
        separate_triangles(n, res.x, opt.feas_tol, opt.parallel_separation);
    sol.value = primal;
    sol.max_violation = sep.max_violation;
    if (sep.max_violation <= opt.feas_tol) {
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          const double x = std::clamp(res.x[tri_index(u, v)], 0.0, 1.0);
          sol.metric.set(u, v, x);
        }
      }
      sol.value = objective_value(g, sol.metric);
      sol.constraints_used = lp.row_count();
      sol.rows_per_round.push_back(lp.row_count());
      return sol;
    }
    if (sol.rounds >= opt.max_rounds) {
      throw LpBudgetError("relaxation: separation round budget exhausted", primal,
                          sep.max_violation);
    }
    int taken = 0;
    for (const TriangleCut& cut : sep.cuts) {
      if (taken >= per_round) break;
      if (!added.insert(cut.id).second) continue;
      SimplexRow row;
      row.terms = {{cut.e_a, 1.0}, {cut.e_b, 1.0}, {cut.e_long, -1.0}};
      row.rhs = 0.0;
      lp.add_row(std::move(row));
      ++taken;
    }
    if (taken == 0) {
      throw LpBudgetError("relaxation: separation made no progress", primal,
                          sep.max_violation);
    }
    sol.rows_per_round.push_back(lp.row_count());
  }
}

}  // namespace cc
