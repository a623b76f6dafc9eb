#pragma once

#include <cstdint>

namespace hfl {

/// Deterministic 64-bit stream used by all instance generators.
///
/// The i-th output (counting from 1) is the splitmix64 finalizer applied to
/// seed + i * 0x9E3779B97F4A7C15, so identical seeds reproduce identical
/// streams on every platform. Unit doubles take the top 53 bits of an output
/// and scale by 2^-53, giving values in [0, 1).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + next_unit() * (hi - lo); }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace hfl
