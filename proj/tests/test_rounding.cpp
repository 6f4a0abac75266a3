#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "cc/generators.hpp"
#include "cc/rounding.hpp"

using namespace cc;

namespace {

void check_partition(const PivotTrace& t, int n) {
  std::set<int> seen;
  for (const auto& step : t.steps) {
    REQUIRE_FALSE(step.cluster.empty());
    CHECK(std::is_sorted(step.cluster.begin(), step.cluster.end()));
    for (int v : step.cluster) {
      CHECK(seen.insert(v).second);
    }
  }
  CHECK(static_cast<int>(seen.size()) == n);
  CHECK(t.clustering.cluster_count() == static_cast<int>(t.steps.size()));
}

}  // namespace

TEST_CASE("f_plus pins the documented values") {
  auto fns = RoundingFunctions::quadratic();
  CHECK(fns.f_plus(0.0) == 0.0);
  CHECK(fns.f_plus(0.19) == 0.0);
  CHECK(fns.f_plus(0.10) == 0.0);
  CHECK(fns.f_plus(0.5095) == 1.0);
  CHECK(fns.f_plus(0.75) == 1.0);
  CHECK(fns.f_plus(1.0) == 1.0);
  // interior point, frozen against the closed form ((x-a)/(b-a))^2
  double expect = ((0.35 - 0.19) / (0.5095 - 0.19)) * ((0.35 - 0.19) / (0.5095 - 0.19));
  CHECK(fns.f_plus(0.35) == expect);
  CHECK(fns.f_plus(0.35) == doctest::Approx(0.25078308487684936).epsilon(1e-12));
  CHECK(fns.f_minus(0.4) == 0.4);
  CHECK(fns.f_minus(0.0) == 0.0);
  CHECK(fns.f_minus(1.0) == 1.0);
}

TEST_CASE("f_plus never exceeds twice its argument") {
  auto fns = RoundingFunctions::quadratic();
  for (int i = 0; i <= 10000; ++i) {
    double x = i / 10000.0;
    CHECK(fns.f_plus(x) <= 2.0 * x + 1e-15);
  }
}

TEST_CASE("identity configuration turns both shapes into x") {
  auto fns = RoundingFunctions::identity();
  for (double x : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    CHECK(fns.f_plus(x) == x);
    CHECK(fns.f_minus(x) == x);
  }
}

TEST_CASE("rounding functions validate their domain and parameters") {
  auto fns = RoundingFunctions::quadratic();
  CHECK_THROWS_AS((void)fns.f_plus(-0.01), std::invalid_argument);
  CHECK_THROWS_AS((void)fns.f_plus(1.01), std::invalid_argument);
  CHECK_THROWS_AS((void)fns.f_minus(-1.0), std::invalid_argument);
  RoundingFunctions flat{0.5, 0.5, false};
  RoundingFunctions neg_a{-0.1, 0.5, false};
  RoundingFunctions big_b{0.1, 1.5, false};
  CHECK_THROWS_AS(flat.validate(), std::invalid_argument);
  CHECK_THROWS_AS(neg_a.validate(), std::invalid_argument);
  CHECK_THROWS_AS(big_b.validate(), std::invalid_argument);
}

TEST_CASE("kwik on an all-positive graph returns one cluster") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto c = kwik_cluster(SignedGraph(5), seed);
    CHECK(c.cluster_count() == 1);
  }
}

TEST_CASE("kwik on a bad triangle costs exactly 1 for every seed") {
  auto g = SignedGraph::from_negative_pairs(3, {{1, 2}});
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto c = kwik_cluster(g, seed);
    CHECK(disagreement_cost(g, c).total() == 1);
  }
}

TEST_CASE("kwik trace honors the positive-neighborhood rule") {
  auto g = gen_planted(12, 3, 0.25, 5).graph;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto t = kwik_cluster_trace(g, seed);
    check_partition(t, 12);
    for (const auto& step : t.steps) {
      bool pivot_inside = false;
      for (int v : step.cluster) {
        if (v == step.pivot)
          pivot_inside = true;
        else
          CHECK(g.positive(step.pivot, v));
      }
      CHECK(pivot_inside);
    }
    // determinism
    auto t2 = kwik_cluster_trace(g, seed);
    CHECK(t.clustering.assignment() == t2.clustering.assignment());
  }
}

TEST_CASE("kwik singleton graph") {
  auto c = kwik_cluster(SignedGraph(1), 3);
  CHECK(c.cluster_count() == 1);
  CHECK(c.size() == 1);
}

TEST_CASE("cgw keeps a tight ball") {
  // all distances zero: every vertex sits in the first pivot's ball
  auto g = SignedGraph(6);
  FractionalMetric m(6, 0.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto c = cgw_round(g, m, seed);
    CHECK(c.cluster_count() == 1);
    CHECK(disagreement_cost(g, c).total() == 0);
  }
}

TEST_CASE("cgw dissolves a loose star into singletons") {
  // star metric: center at distance 1/2 from the leaves, leaves mutually at 1
  auto g = gen_gap_star(5);
  FractionalMetric m(6);
  for (int v = 1; v < 6; ++v) m.set(0, v, 0.5);
  for (int u = 1; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) m.set(u, v, 1.0);
  REQUIRE(verify_metric(m, 1e-9).feasible);

  bool saw_center_first = false;
  for (std::uint64_t seed = 0; seed < 40 && !saw_center_first; ++seed) {
    auto t = cgw_round_trace(g, m, seed);
    check_partition(t, 6);
    if (t.steps.front().pivot != 0) continue;
    saw_center_first = true;
    // the center's ball holds all leaves with average distance 1/2 > 1/4,
    // so the center leaves alone; leaf balls are then empty
    CHECK(t.clustering.cluster_count() == 6);
    CHECK(disagreement_cost(g, t.clustering).total() == 5);
  }
  CHECK(saw_center_first);
}

TEST_CASE("cgw rejects an infeasible metric") {
  auto g = SignedGraph(3);
  FractionalMetric m(3);
  m.set(0, 1, 1.0);  // violates the triangle against the two zero pairs
  CHECK_THROWS_AS(cgw_round(g, m, 1), std::invalid_argument);
  FractionalMetric wrong_size(4);
  CHECK_THROWS_AS(cgw_round(g, wrong_size, 1), std::invalid_argument);
}

TEST_CASE("cmsy with zero distances joins everything") {
  auto g = SignedGraph(5);
  FractionalMetric m(5, 0.0);
  auto fns = RoundingFunctions::quadratic();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto c = cmsy_round(g, m, fns, seed);
    CHECK(c.cluster_count() == 1);
  }
}

TEST_CASE("cmsy never joins a positive pair past the upper knee") {
  auto g = SignedGraph(2);
  FractionalMetric m(2);
  m.set(0, 1, 0.6);  // f_plus saturates at 1, join probability 0
  auto fns = RoundingFunctions::quadratic();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto c = cmsy_round(g, m, fns, seed);
    CHECK(c.cluster_count() == 2);
    CHECK(disagreement_cost(g, c).total() == 1);
  }
}

TEST_CASE("cmsy trace is deterministic and a valid partition") {
  auto inst = gen_planted(10, 2, 0.3, 17);
  FractionalMetric m = metric_from_clustering(inst.planted);
  auto fns = RoundingFunctions::quadratic();
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto t1 = cmsy_round_trace(inst.graph, m, fns, seed);
    auto t2 = cmsy_round_trace(inst.graph, m, fns, seed);
    check_partition(t1, 10);
    CHECK(t1.clustering.assignment() == t2.clustering.assignment());
  }
  // on the planted 0/1 metric the quadratic shape acts integrally: distance 0
  // joins surely, distance 1 never joins, so the planted blocks come back
  auto c = cmsy_round(inst.graph, m, fns, 3);
  CHECK(c.same_partition(inst.planted));
}

TEST_CASE("cmsy identity configuration follows the metric") {
  auto g = SignedGraph::from_negative_pairs(2, {{0, 1}});
  FractionalMetric m(2);
  m.set(0, 1, 1.0);  // negative pair at full distance never joins
  auto fns = RoundingFunctions::identity();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = cmsy_round(g, m, fns, seed);
    CHECK(c.cluster_count() == 2);
    CHECK(disagreement_cost(g, c).total() == 0);
  }
}
