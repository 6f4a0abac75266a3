#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "cc/exact.hpp"
#include "cc/generators.hpp"
#include "cc/packing.hpp"
#include "cc/rng.hpp"

using namespace cc;

TEST_CASE("bad triangle packs with weight one") {
  auto g = SignedGraph::from_negative_pairs(3, {{1, 2}});
  auto b = packing_lower_bound(g);
  CHECK(b.value == doctest::Approx(1.0).epsilon(1e-9));
  REQUIRE(b.triangles.size() == 1);
  CHECK(b.triangles[0] == std::array<int, 3>{0, 1, 2});
  REQUIRE(b.weights.size() == 1);
  CHECK(b.weights[0] == doctest::Approx(1.0));
  CHECK(packing_max_load(g, b) <= 1.0 + 1e-9);
}

TEST_CASE("graphs without bad triangles pack to zero") {
  auto b = packing_lower_bound(SignedGraph(6));
  CHECK(b.value == 0.0);
  CHECK(b.triangles.empty());
  CHECK(packing_max_load(SignedGraph(6), b) == 0.0);
}

TEST_CASE("single negative edge saturates its shared pair") {
  auto g = gen_single_negative_edge(5);
  auto b = packing_lower_bound(g);
  // three bad triangles all ride the one negative pair of capacity 1
  CHECK(b.triangles.size() == 3);
  CHECK(b.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(packing_max_load(g, b) <= 1.0 + 1e-7);
}

TEST_CASE("star packing reaches half the leaves") {
  for (int leaves : {4, 6, 9}) {
    auto g = gen_gap_star(leaves);
    auto b = packing_lower_bound(g);
    CHECK(b.value == doctest::Approx(leaves / 2.0).epsilon(1e-9));
    CHECK(packing_max_load(g, b) <= 1.0 + 1e-7);
    for (double w : b.weights) {
      CHECK(w >= 0.0);
      CHECK(w <= 1.0);
    }
  }
}

TEST_CASE("packing lower-bounds the exact optimum") {
  Rng rng(83);
  for (int trial = 0; trial < 12; ++trial) {
    auto inst = gen_planted(9, 3, 0.25, rng.next_u64());
    auto b = packing_lower_bound(inst.graph);
    auto opt = exact_opt(inst.graph);
    CHECK(b.value <= static_cast<double>(opt.cost.total()) + 1e-7);
    CHECK(packing_max_load(inst.graph, b) <= 1.0 + 1e-7);
    CHECK(b.triangles.size() == enumerate_bad_triangles(inst.graph).size());
  }
}
