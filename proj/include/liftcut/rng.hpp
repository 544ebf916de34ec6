#pragma once

#include <cmath>
#include <cstdint>

namespace liftcut {

// Counter-based 64-bit generator (splitmix64). Chosen over std engines so
// that instances are byte-reproducible across platforms and standard-library
// versions. Normal deviates use Box-Muller on two uniforms.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer on [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  // N(mean, sigma^2) via Box-Muller; u1 is kept away from 0.
  double normal(double mean, double sigma) {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * M_PI * u2);
  }

 private:
  uint64_t state_;
};

}  // namespace liftcut
