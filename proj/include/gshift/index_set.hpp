#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gshift/error.hpp"

namespace gshift {

using Index = std::uint64_t;

/// Either {0,...,n-1} for n >= 1, or all of the naturals.
class IndexSet {
public:
  static IndexSet finite(Index n) {
    require(n >= 1, Errc::InvalidArgument, "finite index set needs size >= 1");
    return IndexSet(n);
  }

  static IndexSet countable() { return IndexSet(std::nullopt); }

  bool is_finite() const { return size_.has_value(); }

  Index size() const {
    require(is_finite(), Errc::InfiniteIndexSet, "size() of a countable index set");
    return *size_;
  }

  bool contains(Index i) const { return !size_ || i < *size_; }

  std::string describe() const {
    return size_ ? std::to_string(*size_) : std::string("countable");
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.size_ == b.size_; }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

private:
  explicit IndexSet(std::optional<Index> n) : size_(n) {}

  std::optional<Index> size_;
};

inline void require_same_index_set(const IndexSet& a, const IndexSet& b) {
  require(a == b, Errc::IndexSetMismatch,
          "index sets differ (" + a.describe() + " vs " + b.describe() + ")");
}

}  // namespace gshift
