#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace defsplat {

// Seeded RNG with hand-rolled distributions so that streams are
// reproducible independent of the standard library's distribution
// implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1)
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n)
  uint64_t uniform_index(uint64_t n) {
    return static_cast<uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  // standard normal via Box-Muller (no cached state, two draws per sample)
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // derive an independent child stream (e.g. per stage)
  Rng fork(uint64_t salt) {
    return Rng(next_u64() ^ (0x9e3779b97f4a7c15ull * (salt + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace defsplat
