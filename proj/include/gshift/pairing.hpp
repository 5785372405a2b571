#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "gshift/error.hpp"
#include "gshift/index_set.hpp"

namespace gshift::pairing {

/// Zigzag bijection from the integers onto the naturals:
/// 0,1,2,... -> 0,2,4,...  and  -1,-2,... -> 1,3,...
inline Index nat_of_int(std::int64_t k) {
  return k >= 0 ? static_cast<Index>(2 * k) : static_cast<Index>(-2 * k - 1);
}

inline std::int64_t int_of_nat(Index m) {
  return (m % 2 == 0) ? static_cast<std::int64_t>(m / 2)
                      : -static_cast<std::int64_t>((m + 1) / 2);
}

inline Index isqrt(Index x) {
  auto r = static_cast<Index>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

/// Cantor pairing bijection N x N -> N: (a,b) |-> (a+b)(a+b+1)/2 + b.
inline Index cantor_pair(Index a, Index b) {
  const Index s = a + b;
  return s * (s + 1) / 2 + b;
}

inline std::pair<Index, Index> cantor_unpair(Index z) {
  const Index w = (isqrt(8 * z + 1) - 1) / 2;
  const Index b = z - w * (w + 1) / 2;
  return {w - b, b};
}

/// The lane decomposition of the naturals: a bijection N x Z -> N whose
/// fibers {lane_point(l, k) : k in Z} partition N into countably many
/// bi-infinite "lanes". Shifting the offset by one is a bijection of N
/// that advances every lane in lockstep.
inline Index lane_point(Index lane, std::int64_t offset) {
  return cantor_pair(lane, nat_of_int(offset));
}

struct LaneCoords {
  Index lane;
  std::int64_t offset;
};

inline LaneCoords lane_coords(Index point) {
  auto [a, b] = cantor_unpair(point);
  return {a, int_of_nat(b)};
}

/// j-th smallest natural (0-based) not contained in the ascending list.
template <typename Sorted>
inline Index nth_not_in(const Sorted& ascending, Index j) {
  Index candidate = j;
  for (Index t : ascending) {
    if (t <= candidate)
      ++candidate;
    else
      break;
  }
  return candidate;
}

/// Number of list elements strictly below x; the list must be ascending.
template <typename Sorted>
inline Index count_below(const Sorted& ascending, Index x) {
  Index n = 0;
  for (Index t : ascending) {
    if (t < x)
      ++n;
    else
      break;
  }
  return n;
}

}  // namespace gshift::pairing
