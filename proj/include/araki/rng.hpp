#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "araki/types.hpp"

namespace araki {

// splitmix64 step; the standard 64-bit finalizer used for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream-splitting rule: the seed of instance `ordinal` under a master
// seed is splitmix64 applied to the mixed pair. Every sampled matrix and
// every record derives from (master seed, ordinal) alone, so sweeps can
// be partitioned across workers and replayed bit-identically.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t ordinal) {
  std::uint64_t s = master;
  const std::uint64_t a = splitmix64(s);
  s = ordinal ^ 0x6a09e667f3bcc909ULL;
  const std::uint64_t b = splitmix64(s);
  s = a ^ (b + 0x9e3779b97f4a7c15ULL);
  return splitmix64(s);
}

// Seeded generator with hand-rolled distributions. mt19937_64 output is
// specified by the standard, and the uniform/normal transforms below use
// only arithmetic on those bits, so streams replay identically; the
// std::*_distribution adapters are implementation-defined and never used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform double in [0, 1), 53 random bits
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform double in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, bound) by rejection
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t threshold = (~bound + 1) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // standard normal via Box-Muller; consumes two uniforms per pair
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    spare_ = mag * std::sin(two_pi * u2);
    have_spare_ = true;
    return mag * std::cos(two_pi * u2);
  }

  // standard complex normal: E|z|^2 = 1
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) / std::sqrt(2.0);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace araki
