#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "projwidth/graph.hpp"

namespace projwidth {

using u128 = unsigned __int128;

inline std::uint64_t isqrt(u128 x) {
  // Newton iteration from a power-of-two overestimate.
  if (x == 0) return 0;
  int bits = 0;
  for (u128 t = x; t != 0; t >>= 1) ++bits;
  u128 r = bits >= 127 ? u128(UINT64_MAX) : u128(1) << ((bits + 1) / 2);
  for (;;) {
    const u128 next = (r + x / r) / 2;
    if (next >= r) break;
    r = next;
  }
  // Compare by division so that squaring cannot overflow.
  while (r > x / r) --r;
  while (r < UINT64_MAX && r + 1 <= x / (r + 1)) ++r;
  return static_cast<std::uint64_t>(r);
}

/// The number (A + sqrt(B)) / c with c > 0 and B >= 0.
struct SurdBound {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 1;

  /// x <= (a + sqrt(b)) / c, decided in integers.
  bool admits(std::int64_t x) const {
    const std::int64_t lhs = c * x - a;
    if (lhs <= 0) return true;
    return static_cast<u128>(lhs) * static_cast<u128>(lhs) <=
           static_cast<u128>(b);
  }

  /// Four decimal places, ties to even.
  std::string decimal() const {
    constexpr std::int64_t scale = 10000;
    std::int64_t q;  // round(value * 10^4)
    const std::uint64_t r = isqrt(static_cast<u128>(b));
    if (static_cast<u128>(r) * r == static_cast<u128>(b)) {
      const std::int64_t num = (a + static_cast<std::int64_t>(r)) * scale;
      q = num / c;
      const std::int64_t rem = num % c;
      if (2 * rem > c || (2 * rem == c && q % 2 != 0)) ++q;
    } else {
      // Irrational, so never a tie: inspect the fifth digit.
      const u128 s = isqrt(static_cast<u128>(b) * 10000000000ULL);
      const u128 n5 = (static_cast<u128>(a) * 100000 + s) / c;
      q = static_cast<std::int64_t>(n5 / 10) + (n5 % 10 >= 5 ? 1 : 0);
    }
    std::string frac = std::to_string(q % scale);
    frac.insert(0, 4 - frac.size(), '0');
    return std::to_string(q / scale) + "." + frac;
  }

  double approx() const {
    return (static_cast<double>(a) + std::sqrt(static_cast<double>(b))) /
           static_cast<double>(c);
  }
};

/// Longest shortest odd cycle: (1 + sqrt(8n - 7)) / 2.
inline SurdBound edge_width_bound(std::int64_t n) { return {1, 8 * n - 7, 2}; }

/// Largest face-width: 1/4 + sqrt(n - 15/16) = (1 + sqrt(16n - 15)) / 4.
inline SurdBound face_width_bound(std::int64_t n) { return {1, 16 * n - 15, 4}; }

/// Single-edge transversal size: sqrt(2 * Delta * n).
inline SurdBound single_edge_bound(std::int64_t max_degree, std::int64_t n) {
  return {0, 2 * max_degree * n, 1};
}

}  // namespace projwidth
