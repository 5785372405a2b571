#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/config.hpp"
#include "gshift/index_map.hpp"

namespace gshift::detail {

/// Advance a base-`base` odometer in lexicographic order (leftmost digit
/// most significant). Returns false after the last tuple wraps to zero.
template <typename T>
inline bool next_tuple(std::vector<T>& digits, T base) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (++digits[pos] < base) return true;
    digits[pos] = 0;
  }
  return false;
}

/// All n^n self-map tables of {0..n-1} in lexicographic order.
template <typename Fn>
inline void for_each_dense_map(Index n, Fn&& fn) {
  std::vector<Index> table(n, 0);
  do {
    fn(IndexMap::dense_table(table));
  } while (next_tuple(table, n));
}

/// All n! permutation tables of {0..n-1} in lexicographic order.
template <typename Fn>
inline void for_each_permutation_map(Index n, Fn&& fn) {
  std::vector<Index> table(n);
  std::iota(table.begin(), table.end(), Index{0});
  do {
    fn(IndexMap::dense_table(table));
  } while (std::next_permutation(table.begin(), table.end()));
}

template <typename Fn>
inline void for_each_index_map(Index n, SemigroupKind kind, Fn&& fn) {
  if (kind == SemigroupKind::S)
    for_each_dense_map(n, std::forward<Fn>(fn));
  else
    for_each_permutation_map(n, std::forward<Fn>(fn));
}

/// All |X|^n dense configurations in lexicographic order of symbol ids.
template <typename Fn>
inline void for_each_dense_config(const AlphabetPtr& alphabet, Index n, Fn&& fn) {
  std::vector<Symbol> values(n, 0);
  const auto base = static_cast<Symbol>(alphabet->size());
  do {
    fn(Config::dense(alphabet, values));
  } while (next_tuple(values, base));
}

inline std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline std::uint64_t factorial_u64(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::uint64_t semigroup_order(Index n, SemigroupKind kind) {
  return kind == SemigroupKind::S ? pow_u64(n, n) : factorial_u64(n);
}

}  // namespace gshift::detail
