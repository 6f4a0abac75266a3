#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "cc/fractional_metric.hpp"
#include "cc/generators.hpp"
#include "cc/graph_io.hpp"
#include "cc/rng.hpp"
#include "cc/signed_graph.hpp"

using namespace cc;

TEST_CASE("metric storage is symmetric with zero diagonal by default") {
  FractionalMetric m(4, 0.5);
  CHECK(m.at(0, 0) == 0.0);
  CHECK(m.at(1, 2) == 0.5);
  m.set(1, 2, 0.75);
  CHECK(m.at(2, 1) == 0.75);
  CHECK_THROWS_AS((void)m.at(0, 4), std::out_of_range);
  CHECK_THROWS_AS(m.set(-1, 0, 0.0), std::out_of_range);
}

TEST_CASE("verify_metric accepts clustering metrics") {
  for (int n : {2, 5, 9}) {
    Rng rng(100 + n);
    std::vector<int> labels(n);
    for (auto& l : labels) l = static_cast<int>(rng.uniform_below(3));
    auto c = Clustering::from_labels(labels);
    auto m = metric_from_clustering(c);
    auto check = verify_metric(m, 1e-12);
    CHECK(check.feasible);
    CHECK(check.worst_triangle <= 0.0);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(m.at(u, v) ==
              (c.cluster_of(u) == c.cluster_of(v) ? 0.0 : 1.0));
  }
}

TEST_CASE("verify_metric flags each violation class") {
  FractionalMetric sym(3);
  sym.set_entry(0, 1, 0.4);  // leaves (1,0) at 0
  auto cs = verify_metric(sym, 1e-9);
  CHECK_FALSE(cs.feasible);
  CHECK(cs.symmetry_violations > 0);
  CHECK(cs.worst_symmetry == doctest::Approx(0.4));

  FractionalMetric diag(3);
  diag.set_entry(1, 1, 0.2);
  auto cd = verify_metric(diag, 1e-9);
  CHECK_FALSE(cd.feasible);
  CHECK(cd.diagonal_violations > 0);
  CHECK(cd.worst_diagonal == doctest::Approx(0.2));

  FractionalMetric bound(3);
  bound.set(0, 1, 1.5);
  auto cb = verify_metric(bound, 1e-9);
  CHECK_FALSE(cb.feasible);
  CHECK(cb.bound_violations > 0);
  CHECK(cb.worst_bound == doctest::Approx(0.5));

  FractionalMetric tri(3);
  tri.set(0, 1, 1.0);  // d01=1 but d02=d12=0
  auto ct = verify_metric(tri, 1e-9);
  CHECK_FALSE(ct.feasible);
  CHECK(ct.triangle_violations > 0);
  CHECK(ct.worst_triangle == doctest::Approx(1.0));
  // the worst witness names a real violated triple
  auto [u, v, w] = ct.worst_triangle_at;
  CHECK(tri.at(u, w) - tri.at(u, v) - tri.at(v, w) == doctest::Approx(1.0));

  // tolerance admits tiny violations
  FractionalMetric tiny(3);
  tiny.set(0, 1, 1e-10);
  tiny.set(0, 2, 0.0);
  tiny.set(1, 2, 0.0);
  CHECK(verify_metric(tiny, 1e-9).feasible);
}

TEST_CASE("objective_value matches disagreement_cost on integral metrics") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.uniform_below(8));
    auto inst = gen_planted(n, 1 + static_cast<int>(rng.uniform_below(3)) % n,
                            0.5, rng.next_u64());
    std::vector<int> labels(n);
    for (auto& l : labels) l = static_cast<int>(rng.uniform_below(4));
    auto c = Clustering::from_labels(labels);
    double obj = objective_value(inst.graph, metric_from_clustering(c));
    CHECK(obj == static_cast<double>(disagreement_cost(inst.graph, c).total()));
  }
}

TEST_CASE("objective_value on fractional input") {
  auto g = SignedGraph::from_negative_pairs(3, {{1, 2}});
  FractionalMetric m(3);
  m.set(0, 1, 0.25);
  m.set(0, 2, 0.5);
  m.set(1, 2, 0.75);
  // positive pairs pay x, the negative pair pays 1-x
  CHECK(objective_value(g, m) == doctest::Approx(0.25 + 0.5 + 0.25));
}

TEST_CASE("metric io round-trips bit-exactly") {
  Rng rng(11);
  FractionalMetric m(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) m.set(u, v, rng.uniform_double());
  std::ostringstream out;
  write_metric(m, out);
  std::istringstream in(out.str());
  auto r = read_metric(in);
  REQUIRE(r.size() == 6);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) CHECK(r.at(u, v) == m.at(u, v));
}

TEST_CASE("metric parser validates") {
  std::istringstream bad_header("cc-graph 3\n");
  CHECK_THROWS_AS(read_metric(bad_header), ParseError);
  std::istringstream out_of_range("cc-metric 3\n0 1 0.5\n0 2 1.5\n1 2 0.5\n");
  CHECK_THROWS_AS(read_metric(out_of_range), ParseError);
  std::istringstream dup("cc-metric 3\n0 1 0.5\n0 1 0.5\n1 2 0.5\n");
  CHECK_THROWS_AS(read_metric(dup), ParseError);
  std::istringstream short_input("cc-metric 3\n0 1 0.5\n");
  CHECK_THROWS_AS(read_metric(short_input), ParseError);
}
