#pragma once

#include <cstdint>

namespace para {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Sentinel for "no edge" / unreachable. All finite values are kept below
// 2^61 so that one addition of two finite values never reaches the sentinel
// range and min-plus arithmetic stays exact in 64 bits.
inline constexpr i64 kInf = i64{1} << 62;
inline constexpr i64 kMaxFinite = (i64{1} << 61) - 1;

constexpr bool is_inf(i64 x) { return x >= kInf; }

// a + b clamped at kInf; kInf absorbs.
constexpr i64 sat_add(i64 a, i64 b) {
  if (a >= kInf || b >= kInf) return kInf;
  const i64 s = a + b;
  return s >= kInf ? kInf : s;
}

}  // namespace para
