#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/blocks.hpp"
#include "gshift/error.hpp"
#include "gshift/index_set.hpp"
#include "gshift/pairing.hpp"

namespace gshift {

enum class SemigroupKind { S, H };

inline const char* semigroup_name(SemigroupKind k) { return k == SemigroupKind::S ? "S" : "H"; }

/// A self-map of the index set, in one of several representations:
///  - DenseTable: an explicit table over a finite index set;
///  - FiniteSupportPermutation: identity outside a finite support that it
///    permutes (this also houses swap sets);
///  - ConstantMap: every index goes to one target;
///  - PairingShiftPower: advance every lane of the lane decomposition of
///    the naturals by a fixed (possibly negative) amount;
///  - MatchingExtension: send index i to targets[i] for i below the prefix
///    length and carry the complement across order-preservingly;
///  - BlockUnionPermutation: the union over all blocks of a BlockSystem of
///    the per-block prefix matchings at a given step.
///
/// Bijective representations carry an inverse rule.
class IndexMap {
public:
  enum class Kind {
    DenseTable,
    FiniteSupportPermutation,
    ConstantMap,
    PairingShiftPower,
    MatchingExtension,
    BlockUnionPermutation,
  };

  static IndexMap identity(const IndexSet& gamma) {
    if (!gamma.is_finite()) return finite_support_permutation(gamma, {});
    std::vector<Index> table(gamma.size());
    std::iota(table.begin(), table.end(), Index{0});
    return dense_table(std::move(table));
  }

  static IndexMap dense_table(std::vector<Index> table) {
    require(!table.empty(), Errc::InvalidArgument, "dense table needs at least one entry");
    const Index n = table.size();
    for (Index v : table)
      require(v < n, Errc::InvalidArgument, "table entry outside index set");
    DenseData data;
    data.table = std::move(table);
    std::vector<bool> hit(n, false);
    bool bij = true;
    for (Index v : data.table) {
      if (hit[v]) bij = false;
      hit[v] = true;
    }
    data.bijective = bij;
    if (bij) {
      data.inverse.resize(n);
      for (Index i = 0; i < n; ++i) data.inverse[data.table[i]] = i;
    }
    IndexMap m(IndexSet::finite(n));
    m.repr_ = std::move(data);
    return m;
  }

  static IndexMap finite_support_permutation(const IndexSet& gamma,
                                             const std::map<Index, Index>& mapping) {
    FsPermData data;
    for (auto [from, to] : mapping) {
      require(gamma.contains(from) && gamma.contains(to), Errc::InvalidArgument,
              "support outside index set");
      if (from != to) data.forward.emplace(from, to);
    }
    for (auto [from, to] : data.forward) {
      require(data.backward.emplace(to, from).second, Errc::InvalidArgument,
              "support mapping is not injective");
    }
    for (auto [to, from] : data.backward)
      require(data.forward.count(to), Errc::InvalidArgument,
              "support mapping does not permute its support");
    IndexMap m(gamma);
    m.repr_ = std::move(data);
    return m;
  }

  /// Pairwise-disjoint transpositions, identity elsewhere.
  static IndexMap swap_set(const IndexSet& gamma,
                           const std::vector<std::pair<Index, Index>>& swaps) {
    std::map<Index, Index> mapping;
    for (auto [i, j] : swaps) {
      require(i != j, Errc::InvalidArgument, "swap of an index with itself");
      require(mapping.emplace(i, j).second && mapping.emplace(j, i).second,
              Errc::InvalidArgument, "swaps are not pairwise disjoint");
    }
    return finite_support_permutation(gamma, mapping);
  }

  static IndexMap constant_map(const IndexSet& gamma, Index target) {
    require(gamma.contains(target), Errc::InvalidArgument, "target outside index set");
    IndexMap m(gamma);
    m.repr_ = ConstantData{target};
    return m;
  }

  static IndexMap pairing_shift_power(std::int64_t power) {
    IndexMap m(IndexSet::countable());
    m.repr_ = ShiftPowerData{power};
    return m;
  }

  static IndexMap matching_extension(std::vector<Index> targets) {
    require(!targets.empty(), Errc::InvalidArgument, "matching extension needs a nonempty prefix");
    MatchingData data;
    data.targets = std::move(targets);
    data.sorted_targets = data.targets;
    std::sort(data.sorted_targets.begin(), data.sorted_targets.end());
    require(std::adjacent_find(data.sorted_targets.begin(), data.sorted_targets.end()) ==
                data.sorted_targets.end(),
            Errc::InvalidArgument, "matching targets must be distinct");
    data.position_by_target.reserve(data.targets.size());
    for (Index i = 0; i < data.targets.size(); ++i)
      data.position_by_target.emplace_back(data.targets[i], i);
    std::sort(data.position_by_target.begin(), data.position_by_target.end());
    IndexMap m(IndexSet::countable());
    m.repr_ = std::move(data);
    return m;
  }

  static IndexMap block_union_permutation(std::shared_ptr<const detail::BlockSystem> system,
                                          std::uint64_t step) {
    require(system != nullptr, Errc::InvalidArgument, "null block system");
    require(step >= 1, Errc::InvalidArgument, "block union step starts at 1");
    IndexMap m(IndexSet::countable());
    m.repr_ = BlockUnionData{std::move(system), step};
    return m;
  }

  static IndexMap block_union_permutation(std::vector<Index> disagreement, std::uint64_t step) {
    return block_union_permutation(
        std::make_shared<const detail::BlockSystem>(std::move(disagreement)), step);
  }

  Kind kind() const { return static_cast<Kind>(repr_.index()); }
  const IndexSet& index_set() const { return gamma_; }

  Index apply(Index i) const {
    require(gamma_.contains(i), Errc::InvalidArgument, "index outside index set");
    switch (kind()) {
      case Kind::DenseTable:
        return std::get<DenseData>(repr_).table[i];
      case Kind::FiniteSupportPermutation: {
        const auto& f = std::get<FsPermData>(repr_).forward;
        auto it = f.find(i);
        return it == f.end() ? i : it->second;
      }
      case Kind::ConstantMap:
        return std::get<ConstantData>(repr_).target;
      case Kind::PairingShiftPower: {
        auto c = pairing::lane_coords(i);
        return pairing::lane_point(c.lane, c.offset + std::get<ShiftPowerData>(repr_).power);
      }
      case Kind::MatchingExtension: {
        const auto& d = std::get<MatchingData>(repr_);
        if (i < d.targets.size()) return d.targets[i];
        return pairing::nth_not_in(d.sorted_targets, i - d.targets.size());
      }
      case Kind::BlockUnionPermutation:
        return block_forward(i);
    }
    raise(Errc::InvalidArgument, "corrupt index map");
  }

  Index operator()(Index i) const { return apply(i); }

  bool is_bijective() const {
    switch (kind()) {
      case Kind::DenseTable:
        return std::get<DenseData>(repr_).bijective;
      case Kind::ConstantMap:
        return gamma_.is_finite() && gamma_.size() == 1;
      default:
        return true;
    }
  }

  /// Pointwise inverse rule; defined exactly for bijective maps.
  Index inverse_apply(Index i) const {
    require(is_bijective(), Errc::InvalidArgument, "inverse of a non-bijective map");
    require(gamma_.contains(i), Errc::InvalidArgument, "index outside index set");
    switch (kind()) {
      case Kind::DenseTable:
        return std::get<DenseData>(repr_).inverse[i];
      case Kind::FiniteSupportPermutation: {
        const auto& b = std::get<FsPermData>(repr_).backward;
        auto it = b.find(i);
        return it == b.end() ? i : it->second;
      }
      case Kind::ConstantMap:
        return i;  // only on a one-point index set
      case Kind::PairingShiftPower: {
        auto c = pairing::lane_coords(i);
        return pairing::lane_point(c.lane, c.offset - std::get<ShiftPowerData>(repr_).power);
      }
      case Kind::MatchingExtension: {
        const auto& d = std::get<MatchingData>(repr_);
        auto it = std::lower_bound(d.position_by_target.begin(), d.position_by_target.end(),
                                   std::make_pair(i, Index{0}));
        if (it != d.position_by_target.end() && it->first == i) return it->second;
        Index r = i - pairing::count_below(d.sorted_targets, i);
        return d.targets.size() + r;
      }
      case Kind::BlockUnionPermutation:
        return block_inverse(i);
    }
    raise(Errc::InvalidArgument, "corrupt index map");
  }

  bool is_identity() const {
    switch (kind()) {
      case Kind::DenseTable: {
        const auto& t = std::get<DenseData>(repr_).table;
        for (Index i = 0; i < t.size(); ++i)
          if (t[i] != i) return false;
        return true;
      }
      case Kind::FiniteSupportPermutation:
        return std::get<FsPermData>(repr_).forward.empty();
      case Kind::ConstantMap:
        return gamma_.is_finite() && gamma_.size() == 1;
      case Kind::PairingShiftPower:
        return std::get<ShiftPowerData>(repr_).power == 0;
      default:
        return false;
    }
  }

  // representation accessors (printing, composition, tests)
  const std::vector<Index>& table() const { return std::get<DenseData>(repr_).table; }
  const std::map<Index, Index>& support_mapping() const {
    return std::get<FsPermData>(repr_).forward;
  }
  Index constant_target() const { return std::get<ConstantData>(repr_).target; }
  std::int64_t shift_power() const { return std::get<ShiftPowerData>(repr_).power; }
  const std::vector<Index>& matching_targets() const {
    return std::get<MatchingData>(repr_).targets;
  }
  const detail::BlockSystem& block_system() const {
    return *std::get<BlockUnionData>(repr_).system;
  }
  std::uint64_t block_step() const { return std::get<BlockUnionData>(repr_).step; }

private:
  // no default member initializers here: gcc 11 rejects variant alternatives
  // with NSDMIs inside the enclosing class (PR c++/96645)
  struct DenseData {
    std::vector<Index> table;
    bool bijective;
    std::vector<Index> inverse;
  };
  struct FsPermData {
    std::map<Index, Index> forward;
    std::map<Index, Index> backward;
  };
  struct ConstantData {
    Index target;
  };
  struct ShiftPowerData {
    std::int64_t power;
  };
  struct MatchingData {
    std::vector<Index> targets;
    std::vector<Index> sorted_targets;
    std::vector<std::pair<Index, Index>> position_by_target;
  };
  struct BlockUnionData {
    std::shared_ptr<const detail::BlockSystem> system;
    std::uint64_t step;
  };

  explicit IndexMap(IndexSet gamma) : gamma_(gamma) {}

  Index block_forward(Index gamma) const {
    const auto& d = std::get<BlockUnionData>(repr_);
    const auto& sys = *d.system;
    const Index theta = sys.anchor_of(gamma);
    const Index i = sys.rank_in_block(gamma);
    if (i < d.step) return sys.lane_elem(theta, i);
    // order-preserving carry of the block tail onto the block minus the
    // matched agreement prefix
    const Index j = i - d.step;
    auto p = sys.partner(theta);
    if (!p) return sys.lane_elem(theta, d.step + j);
    const Index slot = sys.partner_slot(theta);
    const Index u = slot >= d.step ? slot - d.step : 0;
    if (j < u) return sys.lane_elem(theta, d.step + j);
    if (j == u) return *p;
    return sys.lane_elem(theta, d.step + j - 1);
  }

  Index block_inverse(Index delta) const {
    const auto& d = std::get<BlockUnionData>(repr_);
    const auto& sys = *d.system;
    const Index theta = sys.anchor_of(delta);
    if (!sys.in_disagreement(delta)) {
      const Index m = pairing::cantor_unpair(sys.agreement_rank(delta)).second;
      if (m < d.step) return sys.block_elem(theta, m);
      Index j = m - d.step;
      auto p = sys.partner(theta);
      if (p && *p < delta) ++j;
      return sys.block_elem(theta, d.step + j);
    }
    const Index slot = sys.partner_slot(theta);
    const Index j = slot >= d.step ? slot - d.step : 0;
    return sys.block_elem(theta, d.step + j);
  }

  IndexSet gamma_;
  std::variant<DenseData, FsPermData, ConstantData, ShiftPowerData, MatchingData, BlockUnionData>
      repr_;
};

/// chi with chi(a) = psi(phi(a)), so that applying phi-then-psi to shifted
/// configurations equals one application of chi (the action composes
/// contravariantly in the index maps).
inline IndexMap compose_index_maps(const IndexMap& phi, const IndexMap& psi) {
  require_same_index_set(phi.index_set(), psi.index_set());
  const IndexSet& gamma = phi.index_set();

  if (psi.kind() == IndexMap::Kind::ConstantMap)
    return IndexMap::constant_map(gamma, psi.constant_target());
  if (phi.kind() == IndexMap::Kind::ConstantMap)
    return IndexMap::constant_map(gamma, psi.apply(phi.constant_target()));
  if (phi.is_identity()) return psi;
  if (psi.is_identity()) return phi;

  if (gamma.is_finite()) {
    std::vector<Index> table(gamma.size());
    for (Index i = 0; i < table.size(); ++i) table[i] = psi.apply(phi.apply(i));
    return IndexMap::dense_table(std::move(table));
  }

  using K = IndexMap::Kind;
  if (phi.kind() == K::FiniteSupportPermutation && psi.kind() == K::FiniteSupportPermutation) {
    std::map<Index, Index> mapping;
    for (auto [i, _] : phi.support_mapping()) mapping[i] = psi.apply(phi.apply(i));
    for (auto [i, _] : psi.support_mapping())
      if (!mapping.count(i)) mapping[i] = psi.apply(phi.apply(i));
    return IndexMap::finite_support_permutation(gamma, mapping);
  }
  if (phi.kind() == K::PairingShiftPower && psi.kind() == K::PairingShiftPower)
    return IndexMap::pairing_shift_power(phi.shift_power() + psi.shift_power());

  raise(Errc::UnrepresentableComposition,
        "no dense or structured representation for this composition");
}

/// The shift of a map is a homeomorphism of the product space exactly when
/// the map is bijective (the alphabet has at least two symbols by
/// construction).
inline bool is_homeomorphism(const IndexMap& phi, const Alphabet& alphabet,
                             const IndexSet& gamma) {
  (void)alphabet;
  require_same_index_set(phi.index_set(), gamma);
  return phi.is_bijective();
}

}  // namespace gshift
