#pragma once

#include <cstdint>

#include "para/inf.hpp"

namespace para {

// SplitMix64 (Steele, Lea & Flood, 2014). A fixed shift-multiply generator
// so that a given seed yields identical instances on every platform;
// std::mt19937 + distributions would not give that guarantee.
class SplitMix64 {
 public:
  explicit SplitMix64(u64 seed) : state_(seed) {}

  u64 next() {
    u64 z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1. Multiply-shift keeps it portable.
  u64 next_below(u64 bound) {
    return static_cast<u64>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Uniform in [lo, hi], inclusive.
  i64 next_in(i64 lo, i64 hi) {
    return lo + static_cast<i64>(next_below(static_cast<u64>(hi - lo) + 1));
  }

 private:
  u64 state_;
};

}  // namespace para
