#pragma once

#include <cmath>
#include <cstdint>

namespace glnwalk {

// Splittable counter-keyed generator: xoshiro256++ seeded through splitmix64
// from (seed, stream). Streams are independent per Monte Carlo replica, so
// parallel runs are reproducible regardless of thread count.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
    for (auto& w : s_) w = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in (0, 1]
  double uniform01() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  // Exp(1), via inversion; uniform01 is never 0 so log is finite
  double exponential() { return -std::log(uniform01()); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::uint64_t s_[4];
};

}  // namespace glnwalk
