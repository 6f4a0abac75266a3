#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <vector>

#include "cc/rng.hpp"
#include "cc/signed_graph.hpp"
#include "cc/triangle_analysis.hpp"

using namespace cc;

namespace {

TriangleLengths random_valid(Rng& rng) {
  while (true) {
    TriangleLengths l{rng.uniform_double(), rng.uniform_double(),
                      rng.uniform_double()};
    if (lengths_valid(l)) return l;
  }
}

}  // namespace

TEST_CASE("signature indexing is a bijection with readable names") {
  auto sigs = all_signatures();
  CHECK(signature_name(sigs[0]) == "+++");
  CHECK(signature_name(sigs[1]) == "++-");
  CHECK(signature_name(sigs[3]) == "+--");
  CHECK(signature_name(sigs[7]) == "---");
  for (int i = 0; i < 8; ++i) {
    CHECK(signature_index(sigs[i]) == i);
  }
  TriangleSignature sig{Sign::negative, Sign::positive, Sign::positive};
  CHECK(signature_index(sig) == 4);
  CHECK(signature_name(sig) == "-++");
}

TEST_CASE("length validity enforces the triangle inequality") {
  CHECK(lengths_valid({0, 0, 0}));
  CHECK(lengths_valid({1, 1, 1}));
  CHECK(lengths_valid({0.5, 0.5, 1.0}));
  CHECK_FALSE(lengths_valid({1, 0, 0}));
  CHECK_FALSE(lengths_valid({0, 1, 0}));
  CHECK_FALSE(lengths_valid({0, 0, 1}));
  CHECK_FALSE(lengths_valid({-0.1, 0.1, 0.1}));
  CHECK_FALSE(lengths_valid({0.1, 0.1, 1.1}));
}

TEST_CASE("pivot charges at degenerate lengths") {
  auto fns = RoundingFunctions::quadratic();
  auto sigs = all_signatures();
  // two negative edges at the pivot, lengths zero: the opposite positive edge
  // survives both joins
  const auto& pmm = sigs[3];  // "+--"
  TriangleLengths zero{0, 0, 0};
  CHECK(pivot_cost(pmm, zero, Pivot::u, fns) == 0.0);
  CHECK(pivot_cost(pmm, zero, Pivot::v, fns) == 1.0);
  CHECK(pivot_cost(pmm, zero, Pivot::w, fns) == 1.0);
  CHECK(alg_sigma(pmm, zero, fns) == 2.0);
  CHECK(pivot_lp(pmm, zero, Pivot::u, fns) == 0.0);
  CHECK(pivot_lp(pmm, zero, Pivot::v, fns) == 1.0);
  CHECK(pivot_lp(pmm, zero, Pivot::w, fns) == 1.0);
  CHECK(lp_sigma(pmm, zero, fns) == 2.0);
  // all-negative at full stretch: nothing ever joins
  TriangleLengths ones{1, 1, 1};
  CHECK(alg_sigma(sigs[7], ones, fns) == 0.0);
  CHECK(lp_sigma(sigs[7], ones, fns) == 0.0);
  // all-positive at zero: everything joins, no mistakes
  CHECK(alg_sigma(sigs[0], zero, fns) == 0.0);
  CHECK(lp_sigma(sigs[0], zero, fns) == 0.0);
}

TEST_CASE("closed form for one positive opposite edge") {
  auto fns = RoundingFunctions::quadratic();
  auto sig = all_signatures()[3];  // vw positive, uw and uv negative
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    auto l = random_valid(rng);
    double F = fns.f_plus(l.x);
    double alg_expect = 2 - 2 * l.y * l.z - 2 * F + F * l.y + F * l.z;
    double lp_expect = 2 + l.x - l.y - l.z - l.x * l.y * l.z - F * l.y -
                       F * l.z + 2 * F * l.y * l.z;
    CHECK(alg_sigma(sig, l, fns) == doctest::Approx(alg_expect).epsilon(1e-12));
    CHECK(lp_sigma(sig, l, fns) == doctest::Approx(lp_expect).epsilon(1e-12));
  }
}

TEST_CASE("relabeling u and v leaves the totals unchanged") {
  auto sigs = all_signatures();
  for (const auto& fns :
       {RoundingFunctions::quadratic(), RoundingFunctions::identity()}) {
    Rng rng(21);
    for (int trial = 0; trial < 500; ++trial) {
      const auto& sig = sigs[rng.uniform_below(8)];
      auto l = random_valid(rng);
      TriangleSignature swapped{sig.uw, sig.vw, sig.uv};
      TriangleLengths swapped_l{l.y, l.x, l.z};
      CHECK(alg_sigma(sig, l, fns) ==
            doctest::Approx(alg_sigma(swapped, swapped_l, fns)).epsilon(1e-12));
      CHECK(lp_sigma(sig, l, fns) ==
            doctest::Approx(lp_sigma(swapped, swapped_l, fns)).epsilon(1e-12));
    }
  }
}

TEST_CASE("integral lengths reproduce partition mistake counts") {
  // the five 0/1 geometries on three points are exactly the five partitions
  struct Geometry {
    TriangleLengths l;
    std::vector<int> labels;  // u, v, w
  };
  std::vector<Geometry> geoms = {
      {{0, 0, 0}, {0, 0, 0}},  // all together
      {{1, 1, 0}, {0, 0, 1}},  // u,v together
      {{1, 0, 1}, {0, 1, 0}},  // u,w together
      {{0, 1, 1}, {0, 1, 1}},  // v,w together
      {{1, 1, 1}, {0, 1, 2}},  // all apart
  };
  for (const auto& sig : all_signatures()) {
    std::vector<std::pair<int, int>> neg;
    if (sig.uv == Sign::negative) neg.push_back({0, 1});
    if (sig.uw == Sign::negative) neg.push_back({0, 2});
    if (sig.vw == Sign::negative) neg.push_back({1, 2});
    auto g = SignedGraph::from_negative_pairs(3, neg);
    for (const auto& geom : geoms) {
      REQUIRE(lengths_valid(geom.l));
      // objective contribution of each edge at integral lengths
      double obj = 0;
      obj += sig.uv == Sign::positive ? geom.l.z : 1 - geom.l.z;
      obj += sig.uw == Sign::positive ? geom.l.y : 1 - geom.l.y;
      obj += sig.vw == Sign::positive ? geom.l.x : 1 - geom.l.x;
      auto c = Clustering::from_labels(geom.labels);
      CHECK(obj == static_cast<double>(disagreement_cost(g, c).total()));
    }
  }
}

TEST_CASE("quadratic shape certifies at 2.06 on a medium grid") {
  auto res = scan_ratio(RoundingFunctions::quadratic(), 2.06, 0.02);
  CHECK(res.max_difference >= 0.0);
  CHECK(res.max_difference <= 1e-9);
  CHECK(res.max_ratio > 1.9);
  CHECK(res.max_ratio <= 2.06 + 1e-9);
  for (int i = 0; i < 8; ++i) {
    CHECK(signature_index(res.per_signature[i].sig) == i);
    CHECK(res.per_signature[i].difference <= 1e-9);
    CHECK(lengths_valid(res.per_signature[i].at, 1e-9));
  }
  CHECK(res.per_signature[0].ratio_defined);
  CHECK(res.per_signature[3].ratio_defined);
}

TEST_CASE("identity shape certifies at 2.5") {
  auto res = scan_ratio(RoundingFunctions::identity(), 2.5, 0.025);
  CHECK(res.max_difference >= 0.0);
  CHECK(res.max_difference <= 1e-9);
  CHECK(res.max_ratio <= 2.5 + 1e-9);
}

TEST_CASE("identity shape fails at 2 with a frozen witness") {
  auto res = scan_ratio(RoundingFunctions::identity(), 2.0, 0.05);
  const auto& rec = res.per_signature[1];  // "++-"
  CHECK(rec.difference == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rec.at.x == 0.5);
  CHECK(rec.at.y == 0.5);
  CHECK(rec.at.z == 1.0);
  CHECK(rec.alg == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(rec.lp == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(res.max_difference >= 0.25 - 1e-12);
  // the witness point really separates the two sides
  auto fns = RoundingFunctions::identity();
  CHECK(alg_sigma(rec.sig, rec.at, fns) - 2.0 * lp_sigma(rec.sig, rec.at, fns) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("scan handles coarse grids and validates arguments") {
  auto res = scan_ratio(RoundingFunctions::quadratic(), 2.06, 0.4);
  CHECK(res.max_difference <= 1e-9);
  CHECK(res.grid_step == 0.4);
  CHECK(res.rho == 2.06);
  CHECK_THROWS_AS(scan_ratio(RoundingFunctions::quadratic(), 2.06, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(scan_ratio(RoundingFunctions::quadratic(), -1.0, 0.1),
                  std::invalid_argument);
}
