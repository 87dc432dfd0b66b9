#pragma once

#include <cstdint>

namespace logineq {

// splitmix64: tiny, fast, and fully specified, so seeded runs are
// reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Strictly inside (0, 1); handy under logarithms.
  double open01() {
    double u;
    do {
      u = uniform01();
    } while (u == 0.0);
    return u;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  // Independent per-trial stream: hash the (seed, counter) pair so that
  // serial and parallel runs see identical draws.
  static Rng stream(std::uint64_t seed, std::uint64_t counter) {
    Rng mix(seed ^ (0x6a09e667f3bcc909ULL + counter * 0x9e3779b97f4a7c15ULL));
    mix.next();
    return mix;
  }

 private:
  std::uint64_t state_;
};

}  // namespace logineq
