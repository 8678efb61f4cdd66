#pragma once

#include <cmath>
#include <cstdint>

namespace eur {

// splitmix64: tiny, stateless-seedable generator with bit-stable output on
// every platform. std::uniform_real_distribution is not bit-stable across
// standard libraries, and the determinism contract requires byte-identical
// records, hence the hand-rolled three-liner.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller (deterministic within a binary)
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
  }
};

// Counter-based per-start seed derivation: parallel and serial runs agree.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  SplitMix64 g(master ^ (0x9E3779B97F4A7C15ULL * (counter + 1)));
  return g.next();
}

}  // namespace eur
