#include "cc/rng.hpp"

#include <stdexcept>

namespace cc {

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

std::uint64_t hash_name(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t cell_seed(std::uint64_t base, std::uint64_t instance_index,
                        std::string_view algorithm, std::uint64_t trial_index) {
  std::uint64_t h = mix_seed(base, instance_index);
  h = mix_seed(h, hash_name(algorithm));
  return mix_seed(h, trial_index);
}

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  for (int i = 0; i < 4; ++i) s_[i] = splitmix64_at(seed, i);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be >= 1");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

bool Rng::bernoulli(double p) { return uniform_double() < p; }

Rng Rng::substream(std::uint64_t index) const {
  return Rng(mix_seed(seed_, index));
}

}  // namespace cc
