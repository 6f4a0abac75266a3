#include "cc/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace cc {

PackingBound packing_lower_bound(const SignedGraph& g,
                                 const SimplexOptions& opt) {
  PackingBound out;
  out.triangles = enumerate_bad_triangles(g);
  const int nt = static_cast<int>(out.triangles.size());
  out.weights.assign(static_cast<std::size_t>(nt), 0.0);
  if (nt == 0) return out;

  // maximize total weight = minimize its negation; one capacity row per pair
  // that lies in at least one bad triangle
  std::vector<std::vector<int>> pair_triangles(g.pair_count());
  for (int t = 0; t < nt; ++t) {
    const std::array<int, 3>& tri = out.triangles[t];
    pair_triangles[g.pair_index(tri[0], tri[1])].push_back(t);
    pair_triangles[g.pair_index(tri[0], tri[2])].push_back(t);
    pair_triangles[g.pair_index(tri[1], tri[2])].push_back(t);
  }
  BoundedSimplex lp(std::vector<double>(static_cast<std::size_t>(nt), -1.0),
                    std::vector<double>(static_cast<std::size_t>(nt), 0.0),
                    std::vector<double>(static_cast<std::size_t>(nt), 1.0));
  for (const std::vector<int>& cover : pair_triangles) {
    if (cover.empty()) continue;
    SimplexRow row;
    row.rhs = -1.0;
    for (int t : cover) row.terms.emplace_back(t, -1.0);
    lp.add_row(std::move(row));
  }
  const SimplexResult res =
      lp.solve(std::vector<bool>(static_cast<std::size_t>(nt), false), opt);
  if (res.status != SimplexStatus::optimal) {
    throw std::runtime_error("packing_lower_bound: pivot budget exhausted");
  }
  double total = 0.0;
  for (int t = 0; t < nt; ++t) {
    out.weights[t] = std::clamp(res.x[t], 0.0, 1.0);
    total += out.weights[t];
  }
  out.value = total;
  return out;
}

double packing_max_load(const SignedGraph& g, const PackingBound& bound) {
  if (bound.triangles.size() != bound.weights.size()) {
    throw std::invalid_argument("packing_max_load: misaligned packing");
  }
  std::vector<double> load(g.pair_count(), 0.0);
  for (std::size_t t = 0; t < bound.triangles.size(); ++t) {
    const std::array<int, 3>& tri = bound.triangles[t];
    load[g.pair_index(tri[0], tri[1])] += bound.weights[t];
    load[g.pair_index(tri[0], tri[2])] += bound.weights[t];
    load[g.pair_index(tri[1], tri[2])] += bound.weights[t];
  }
  double worst = 0.0;
  for (double v : load) worst = std::max(worst, v);
  return worst;
}

}  // namespace cc
