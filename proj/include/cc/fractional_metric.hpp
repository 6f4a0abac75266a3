#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cc/signed_graph.hpp"

namespace cc {

// Symmetric distance assignment x_uv in [0,1] with zero diagonal, stored as a
// dense n*n array so that symmetry and diagonal bugs stay observable to
// verify_metric instead of being erased by the storage layout.
class FractionalMetric {
 public:
  explicit FractionalMetric(int n, double fill = 0.0);

  int size() const { return n_; }
  double at(int u, int v) const;
  // sets both (u,v) and (v,u)
  void set(int u, int v, double x);
  // sets a single directed entry; exists so tests and parsers can build
  // deliberately broken inputs for verify_metric
  void set_entry(int u, int v, double x);

 private:
  int n_;
  std::vector<double> data_;
  void check_vertex(int u) const;
};

// worst violation per constraint class; `feasible` is with respect to the
// tolerance passed to verify_metric
struct MetricCheck {
  bool feasible = true;
  double worst_bound = 0.0;      // max(-x_uv, x_uv - 1)
  double worst_symmetry = 0.0;   // max |x_uv - x_vu|
  double worst_diagonal = 0.0;   // max |x_uu|
  double worst_triangle = 0.0;   // max x_uw - x_uv - x_vw
  std::array<int, 3> worst_triangle_at{-1, -1, -1};  // (u, v, w) via pivot v
  long long bound_violations = 0;
  long long symmetry_violations = 0;
  long long diagonal_violations = 0;
  long long triangle_violations = 0;
};

MetricCheck verify_metric(const FractionalMetric& m, double tol = 1e-7);

// 0 within a cluster, 1 across clusters
FractionalMetric metric_from_clustering(const Clustering& c);

// sum over positive pairs of x_uv plus sum over negative pairs of 1 - x_uv
double objective_value(const SignedGraph& g, const FractionalMetric& m);

// Metric format: header "cc-metric <n>", then n(n-1)/2 lines "<u> <v> <x>"
// with u < v and x in [0,1], 17 significant digits on write.
FractionalMetric read_metric(std::istream& in);
FractionalMetric read_metric_file(const std::string& path);
void write_metric(const FractionalMetric& m, std::ostream& out);
void write_metric_file(const FractionalMetric& m, const std::string& path);

}  // namespace cc
