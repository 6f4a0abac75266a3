#pragma once

#include <cstdint>
#include <string_view>

namespace cc {

// Seed plumbing is built on the splitmix64 finalizer so that every stream is a
// pure function of (base seed, indices) and reproduces across platforms.
inline constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// i-th output of the splitmix64 sequence started at `seed`
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
  return splitmix64_finalize(seed + (i + 1) * kGolden64);
}

// combine a running 64-bit hash with one more word
constexpr std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) {
  h ^= v + kGolden64 + (h << 6) + (h >> 2);
  return splitmix64_finalize(h + kGolden64);
}

// FNV-1a over the bytes of a name, for hashing algorithm identifiers
std::uint64_t hash_name(std::string_view name);

// per-cell seed for experiment trials: hash(base, instance, algorithm, trial)
std::uint64_t cell_seed(std::uint64_t base, std::uint64_t instance_index,
                        std::string_view algorithm, std::uint64_t trial_index);

// xoshiro256** with splitmix64 state initialization. Substreams are derived
// from the original seed, one per index, so parallel consumers never share.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // uniform in [0,1), 53-bit resolution
  double uniform_double();
  // unbiased uniform in {0, ..., bound-1}, bound >= 1
  std::uint64_t uniform_below(std::uint64_t bound);
  bool bernoulli(double p);

  Rng substream(std::uint64_t index) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t s_[4];
  std::uint64_t seed_;
};

}  // namespace cc
