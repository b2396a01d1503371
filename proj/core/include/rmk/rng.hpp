#pragma once

#include <cstdint>

namespace rmk {

/// SplitMix64 (Steele, Lea, Flood 2014). Every random draw in the project goes
/// through this generator so trials replay bit-exactly across implementations.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Derived draws:
///   uniform01()   = (next() >> 11) * 2^-53
///   bernoulli(p)  = p >= 1 || uniform01() < p
///   below(n)      = next() % n          (n > 0; modulo bias accepted)
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kMul1 = 0xBF58476D1CE4E5B9ULL;
  static constexpr std::uint64_t kMul2 = 0x94D049BB133111EBULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    return uniform01() < p;
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * kMul1;
    z = (z ^ (z >> 27)) * kMul2;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Independent per-trial seed: mix(seed + (index + 1) * gamma).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64::mix(seed + (index + 1) * SplitMix64::kGamma);
}

}  // namespace rmk
