#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <set>
#include <vector>

#include "cc/rng.hpp"

using namespace cc;

TEST_CASE("splitmix64 finalize is a fixed function") {
  CHECK(splitmix64_finalize(0) == 0);
  // two calls, same input, same output
  std::uint64_t a = splitmix64_finalize(123456789);
  std::uint64_t b = splitmix64_finalize(123456789);
  CHECK(a == b);
  CHECK(a != 123456789);
  CHECK(splitmix64_at(7, 0) == splitmix64_finalize(7 + kGolden64));
  CHECK(splitmix64_at(7, 3) == splitmix64_finalize(7 + 4 * kGolden64));
}

TEST_CASE("mix_seed depends on both arguments") {
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(0, 0) != mix_seed(1, 0));
}

TEST_CASE("hash_name matches a reference fnv-1a") {
  auto ref = [](std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  };
  CHECK(hash_name("") == 0xcbf29ce484222325ULL);
  for (const char* s : {"kwik", "cgw", "cmsy", "bbc", "a", "ab", "ba"}) {
    CHECK(hash_name(s) == ref(s));
  }
  CHECK(hash_name("ab") != hash_name("ba"));
}

TEST_CASE("cell_seed is stable and sensitive to every argument") {
  std::uint64_t s = cell_seed(42, 3, "kwik", 17);
  CHECK(s == cell_seed(42, 3, "kwik", 17));
  CHECK(s != cell_seed(43, 3, "kwik", 17));
  CHECK(s != cell_seed(42, 4, "kwik", 17));
  CHECK(s != cell_seed(42, 3, "cgw", 17));
  CHECK(s != cell_seed(42, 3, "kwik", 18));
}

TEST_CASE("rng streams are reproducible") {
  Rng a(987654321), b(987654321);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(987654322);
  int diff = 0;
  Rng a2(987654321);
  for (int i = 0; i < 64; ++i) diff += a2.next_u64() != c.next_u64();
  CHECK(diff > 32);
}

TEST_CASE("seed zero still produces a live stream") {
  Rng r(0);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) seen.insert(r.next_u64());
  CHECK(seen.size() == 100);
}

TEST_CASE("substreams differ from the parent and from each other") {
  Rng base(5);
  Rng s0 = base.substream(0);
  Rng s1 = base.substream(1);
  Rng p(5);
  std::uint64_t a = s0.next_u64(), b = s1.next_u64(), c = p.next_u64();
  CHECK(a != b);
  CHECK(a != c);
  CHECK(b != c);
  // substream derivation does not consume from the parent
  Rng q(5);
  CHECK(q.next_u64() == c);
}

TEST_CASE("uniform_double lies in [0,1) with a sane mean") {
  Rng r(2024);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    double u = r.uniform_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("uniform_below respects the bound and is roughly uniform") {
  Rng r(77);
  CHECK(r.uniform_below(1) == 0);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) {
    std::uint64_t v = r.uniform_below(6);
    REQUIRE(v < 6);
    ++counts[static_cast<int>(v)];
  }
  for (int c : counts) {
    CHECK(c > 9000);
    CHECK(c < 11000);
  }
}

TEST_CASE("bernoulli hits the degenerate probabilities exactly") {
  Rng r(3);
  for (int i = 0; i < 200; ++i) {
    CHECK_FALSE(r.bernoulli(0.0));
    CHECK(r.bernoulli(1.0));
  }
  int hits = 0;
  for (int i = 0; i < 20000; ++i) hits += r.bernoulli(0.25);
  CHECK(hits > 4500);
  CHECK(hits < 5500);
}
