#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cc/expectation.hpp"
#include "cc/generators.hpp"
#include "cc/lp_relaxation.hpp"
#include "cc/rng.hpp"
#include "cc/rounding.hpp"

using namespace cc;

namespace {

struct McStats {
  double mean = 0.0;
  double se = 0.0;
};

template <typename F>
McStats monte_carlo(int trials, F&& one) {
  double sum = 0, sumsq = 0;
  for (int t = 0; t < trials; ++t) {
    double c = one(t);
    sum += c;
    sumsq += c * c;
  }
  double mean = sum / trials;
  double var = (sumsq - trials * mean * mean) / (trials - 1);
  return {mean, std::sqrt(std::max(0.0, var) / trials)};
}

}  // namespace

TEST_CASE("pivot recursion on a bad triangle pays exactly one") {
  auto g = SignedGraph::from_negative_pairs(3, {{1, 2}});
  CHECK(kwik_expected_cost(g) == 1.0);
}

TEST_CASE("pivot recursion matches the closed form on one negative edge") {
  // expected cost 3 - 6/n
  for (int n : {3, 4, 5, 6}) {
    auto g = gen_single_negative_edge(n);
    CHECK(kwik_expected_cost(g) ==
          doctest::Approx(3.0 - 6.0 / n).epsilon(1e-12));
  }
}

TEST_CASE("pivot recursion on friendly graphs is free") {
  CHECK(kwik_expected_cost(SignedGraph(4)) == 0.0);
  CHECK(kwik_expected_cost(SignedGraph(1)) == 0.0);
}

TEST_CASE("pivot recursion refuses oversized graphs") {
  CHECK_THROWS_AS(kwik_expected_cost(SignedGraph(7)), std::invalid_argument);
  CHECK_NOTHROW(kwik_expected_cost(SignedGraph(7), 7));
}

TEST_CASE("pivot recursion agrees with sampling") {
  auto inst = gen_planted(6, 2, 0.3, 12);
  double oracle = kwik_expected_cost(inst.graph);
  auto mc = monte_carlo(40000, [&](int t) {
    auto c = kwik_cluster(inst.graph, mix_seed(900, t));
    return static_cast<double>(disagreement_cost(inst.graph, c).total());
  });
  CHECK(std::fabs(mc.mean - oracle) <= 5 * mc.se + 1e-9);
}

TEST_CASE("join enumeration with zero distances joins everything") {
  auto g = SignedGraph(3);
  FractionalMetric m(3, 0.0);
  CHECK(cmsy_expected_cost(g, m, RoundingFunctions::quadratic()) == 0.0);
}

TEST_CASE("join enumeration on a stretched positive pair") {
  auto g = SignedGraph(2);
  auto fns = RoundingFunctions::quadratic();
  FractionalMetric far(2);
  far.set(0, 1, 0.6);  // join probability 0, the pair always splits
  CHECK(cmsy_expected_cost(g, far, fns) == doctest::Approx(1.0));
  FractionalMetric mid(2);
  mid.set(0, 1, 0.3);  // split probability is f_plus(0.3)
  CHECK(cmsy_expected_cost(g, mid, fns) ==
        doctest::Approx(fns.f_plus(0.3)).epsilon(1e-12));
  auto neg = SignedGraph::from_negative_pairs(2, {{0, 1}});
  FractionalMetric m(2);
  m.set(0, 1, 0.3);  // joins with probability 0.7 and each join costs 1
  CHECK(cmsy_expected_cost(neg, m, fns) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("join enumeration refuses oversized graphs and bad metrics") {
  auto g = SignedGraph(5);
  FractionalMetric m(5, 0.0);
  auto fns = RoundingFunctions::quadratic();
  CHECK_THROWS_AS(cmsy_expected_cost(g, m, fns), std::invalid_argument);
  CHECK_NOTHROW(cmsy_expected_cost(g, m, fns, 5));
  FractionalMetric broken(4);
  broken.set(0, 1, 1.0);  // violates the triangle through the zero pairs
  CHECK_THROWS_AS(cmsy_expected_cost(SignedGraph(4), broken, fns),
                  std::invalid_argument);
}

TEST_CASE("join enumeration agrees with sampling on an lp metric") {
  auto inst = gen_planted(4, 2, 0.25, 3);
  auto sol = solve_relaxation(inst.graph);
  auto fns = RoundingFunctions::quadratic();
  double oracle = cmsy_expected_cost(inst.graph, sol.metric, fns);
  auto mc = monte_carlo(40000, [&](int t) {
    auto c = cmsy_round(inst.graph, sol.metric, fns, mix_seed(901, t));
    return static_cast<double>(disagreement_cost(inst.graph, c).total());
  });
  CHECK(std::fabs(mc.mean - oracle) <= 5 * mc.se + 1e-9);
}
