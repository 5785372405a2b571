#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/config.hpp"
#include "gshift/index_map.hpp"

namespace gshift {

/// Deterministic generator for campaign instances. mt19937_64 is fully
/// specified by the standard; sampling avoids std::uniform_int_distribution
/// (whose algorithm is implementation-defined) so streams are identical
/// across platforms and toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    // rejection sampling over the low bits
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  bool coin() { return below(2) == 1; }

  Symbol symbol(const Alphabet& alphabet) {
    return static_cast<Symbol>(below(alphabet.size()));
  }

  /// Fresh seed for a sub-campaign.
  std::uint64_t fork() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

struct FiniteSupportSpec {
  std::uint64_t max_exceptions = 6;
  Index index_range = 64;  // exception indices drawn from [0, index_range)
};

inline Config random_finite_support_config(Rng& rng, const AlphabetPtr& alphabet,
                                           const FiniteSupportSpec& spec = {}) {
  Symbol def = rng.symbol(*alphabet);
  std::map<Index, Symbol> exceptions;
  const std::uint64_t count = rng.below(spec.max_exceptions + 1);
  for (std::uint64_t k = 0; k < count; ++k)
    exceptions[rng.below(spec.index_range)] = rng.symbol(*alphabet);
  return Config::finite_support(alphabet, def, exceptions);
}

inline Config random_finite_support_config(Rng& rng, const AlphabetPtr& alphabet, Symbol def,
                                           const FiniteSupportSpec& spec) {
  std::map<Index, Symbol> exceptions;
  const std::uint64_t count = rng.below(spec.max_exceptions + 1);
  for (std::uint64_t k = 0; k < count; ++k)
    exceptions[rng.below(spec.index_range)] = rng.symbol(*alphabet);
  return Config::finite_support(alphabet, def, exceptions);
}

inline Config random_dense_config(Rng& rng, const AlphabetPtr& alphabet, Index n) {
  std::vector<Symbol> values(n);
  for (auto& v : values) v = rng.symbol(*alphabet);
  return Config::dense(alphabet, std::move(values));
}

/// Random permutation of a random support drawn from [0, index_range).
inline IndexMap random_finite_support_permutation(Rng& rng, std::uint64_t max_support,
                                                  Index index_range) {
  const std::uint64_t size = rng.below(max_support + 1);
  std::vector<Index> support;
  while (support.size() < size) {
    Index candidate = rng.below(index_range);
    bool fresh = true;
    for (Index s : support) fresh = fresh && s != candidate;
    if (fresh) support.push_back(candidate);
  }
  std::vector<Index> shuffled = support;
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
  std::map<Index, Index> mapping;
  for (std::size_t i = 0; i < support.size(); ++i) mapping[support[i]] = shuffled[i];
  return IndexMap::finite_support_permutation(IndexSet::countable(), mapping);
}

inline IndexMap random_dense_map(Rng& rng, Index n) {
  std::vector<Index> table(n);
  for (auto& t : table) t = rng.below(n);
  return IndexMap::dense_table(std::move(table));
}

}  // namespace gshift
