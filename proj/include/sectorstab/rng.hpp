#pragma once

#include <cstdint>

namespace sectorstab {

// splitmix64. Chosen over <random> engines because its output is pinned by
// the algorithm, not the standard library, so seeded runs replay exactly on
// any platform, and because independent per-index streams are one mix away.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi); returns lo exactly when the interval is empty.
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  /// Stream for (seed, index): consuming streams in any order gives the
  /// same per-index values.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed + 0x9E3779B97F4A7C15ull * (index + 1)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace sectorstab
