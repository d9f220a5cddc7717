#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace hlwsim {

// Seeded RNG with hand-rolled distributions. The mt19937_64 engine is
// bit-specified by the standard; std:: distributions are not, so uniform
// draws are derived from raw 64-bit output to keep trajectories and
// datasets reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
    const std::uint64_t q = std::numeric_limits<std::uint64_t>::max() / n;
    const std::uint64_t limit = q * n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t seed() const { return seed_; }

  // Independent child stream for a given purpose id.
  Rng derive(std::uint64_t stream) const { return Rng(mix(seed_, stream)); }

  // splitmix64 finalizer; decorrelates (seed, stream) pairs.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace hlwsim
