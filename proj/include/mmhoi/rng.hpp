#pragma once

#include <cstdint>

namespace mmhoi {

// SplitMix64 (Steele/Lea/Flood 2014). Pure integer state, so identical seeds
// give identical streams on every platform. fork(tag) derives an independent
// child stream keyed on (current state, tag); entity streams derived this way
// do not shift when unrelated entities are added.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  SplitMix64 fork(std::uint64_t tag) const {
    return SplitMix64(finalize(state_ + 0x9e3779b97f4a7c15ull * (tag + 1)));
  }

private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace mmhoi
