#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gshift/error.hpp"
#include "gshift/index_set.hpp"
#include "gshift/pairing.hpp"

namespace gshift::detail {

/// Partition of the naturals into countably many infinite blocks, defined
/// for a finite disagreement set B (ascending) with cofinite complement A.
///
/// Each block is anchored at an element theta of A. It consists of the
/// theta-lane (the increasing image of the naturals under the per-anchor
/// Cantor slice of A) plus at most one partner from B: the i-th element of
/// B partners the i-th smallest element of A. Blocks are pairwise disjoint
/// and cover every natural; each block meets B at most once, so all but
/// finitely many of its members carry agreeing coordinates.
class BlockSystem {
public:
  explicit BlockSystem(std::vector<Index> disagreement) : b_(std::move(disagreement)) {
    require(std::is_sorted(b_.begin(), b_.end()) &&
                std::adjacent_find(b_.begin(), b_.end()) == b_.end(),
            Errc::InvalidArgument, "disagreement set must be strictly ascending");
  }

  const std::vector<Index>& disagreement() const { return b_; }

  bool in_disagreement(Index gamma) const {
    return std::binary_search(b_.begin(), b_.end(), gamma);
  }

  /// j-th smallest element of A (0-based).
  Index agreement_at(Index j) const { return pairing::nth_not_in(b_, j); }

  /// Rank of gamma within A; gamma must lie in A.
  Index agreement_rank(Index gamma) const {
    return gamma - pairing::count_below(b_, gamma);
  }

  /// m-th element (ascending) of the lane anchored at theta; theta in A.
  Index lane_elem(Index theta, Index m) const {
    return agreement_at(pairing::cantor_pair(agreement_rank(theta), m));
  }

  /// The block member drawn from B, when the anchor has one.
  std::optional<Index> partner(Index theta) const {
    Index r = agreement_rank(theta);
    if (r < b_.size()) return b_[r];
    return std::nullopt;
  }

  /// Anchor of the unique block containing gamma.
  Index anchor_of(Index gamma) const {
    auto it = std::lower_bound(b_.begin(), b_.end(), gamma);
    if (it != b_.end() && *it == gamma)
      return agreement_at(static_cast<Index>(it - b_.begin()));
    return agreement_at(pairing::cantor_unpair(agreement_rank(gamma)).first);
  }

  bool member_of(Index gamma, Index theta) const { return anchor_of(gamma) == theta; }

  /// Count of lane elements below the block's partner.
  Index partner_slot(Index theta) const {
    auto p = partner(theta);
    require(p.has_value(), Errc::InvalidArgument, "anchor has no partner");
    Index m = 0;
    while (lane_elem(theta, m) < *p) ++m;
    return m;
  }

  /// i-th element (ascending, 0-based) of the block anchored at theta.
  Index block_elem(Index theta, Index i) const {
    auto p = partner(theta);
    if (!p) return lane_elem(theta, i);
    Index slot = partner_slot(theta);
    if (i < slot) return lane_elem(theta, i);
    if (i == slot) return *p;
    return lane_elem(theta, i - 1);
  }

  /// Position of gamma within its own block.
  Index rank_in_block(Index gamma) const {
    Index theta = anchor_of(gamma);
    if (in_disagreement(gamma)) return partner_slot(theta);
    Index m = pairing::cantor_unpair(agreement_rank(gamma)).second;
    auto p = partner(theta);
    return m + ((p && *p < gamma) ? 1 : 0);
  }

private:
  std::vector<Index> b_;
};

}  // namespace gshift::detail
