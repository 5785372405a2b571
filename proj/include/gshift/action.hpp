#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gshift/config.hpp"
#include "gshift/error.hpp"
#include "gshift/index_map.hpp"

namespace gshift {

/// The set {a : x(a) = y(a)} (or its complement), described explicitly.
/// FiniteSet lists the members; Cofinite lists the finite complement.
class AgreementSummary {
public:
  enum class Kind { FiniteSet, Cofinite };

  static AgreementSummary finite_set(std::vector<Index> members) {
    return AgreementSummary(Kind::FiniteSet, std::move(members));
  }
  static AgreementSummary cofinite(std::vector<Index> complement) {
    return AgreementSummary(Kind::Cofinite, std::move(complement));
  }

  Kind kind() const { return kind_; }

  /// Members for FiniteSet, the complement for Cofinite; always ascending.
  const std::vector<Index>& indices() const { return indices_; }

  bool empty() const { return kind_ == Kind::FiniteSet && indices_.empty(); }
  bool infinite() const { return kind_ == Kind::Cofinite; }

  std::optional<Index> cardinality() const {
    if (kind_ == Kind::Cofinite) return std::nullopt;
    return indices_.size();
  }

  bool contains(Index i) const {
    bool listed = std::binary_search(indices_.begin(), indices_.end(), i);
    return kind_ == Kind::FiniteSet ? listed : !listed;
  }

  /// Smallest member, when one exists.
  std::optional<Index> any_member() const {
    if (kind_ == Kind::FiniteSet) {
      if (indices_.empty()) return std::nullopt;
      return indices_.front();
    }
    Index candidate = 0;
    for (Index blocked : indices_) {
      if (blocked == candidate)
        ++candidate;
      else
        break;
    }
    return candidate;
  }

private:
  AgreementSummary(Kind kind, std::vector<Index> indices)
      : kind_(kind), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }

  Kind kind_;
  std::vector<Index> indices_;
};

namespace detail {

template <typename Compare>
inline AgreementSummary compare_pointwise(const Config& x, const Config& y, Compare&& same) {
  require_compatible(x, y);
  require(!x.is_procedural() && !y.is_procedural(), Errc::UnsupportedRepresentation,
          "agreement needs a finite description of both points");
  if (x.index_set().is_finite()) {
    std::vector<Index> hits;
    for (Index i = 0; i < x.index_set().size(); ++i)
      if (same(x.at(i), y.at(i))) hits.push_back(i);
    return AgreementSummary::finite_set(std::move(hits));
  }
  std::vector<Index> probe;
  for (auto& [i, _] : x.exceptions()) probe.push_back(i);
  for (auto& [i, _] : y.exceptions()) probe.push_back(i);
  std::sort(probe.begin(), probe.end());
  probe.erase(std::unique(probe.begin(), probe.end()), probe.end());
  if (same(x.default_symbol(), y.default_symbol())) {
    std::vector<Index> complement;
    for (Index i : probe)
      if (!same(x.at(i), y.at(i))) complement.push_back(i);
    return AgreementSummary::cofinite(std::move(complement));
  }
  std::vector<Index> hits;
  for (Index i : probe)
    if (same(x.at(i), y.at(i))) hits.push_back(i);
  return AgreementSummary::finite_set(std::move(hits));
}

}  // namespace detail

inline AgreementSummary agreement(const Config& x, const Config& y) {
  return detail::compare_pointwise(x, y, [](Symbol a, Symbol b) { return a == b; });
}

inline AgreementSummary disagreement(const Config& x, const Config& y) {
  return detail::compare_pointwise(x, y, [](Symbol a, Symbol b) { return a != b; });
}

/// The shifted configuration: result(a) = x(map(a)) for every index a.
/// The representation of x is preserved; a finite-support input is only
/// accepted under maps whose preimage of the exception set stays finite
/// (constant maps and bijective maps with an inverse rule).
inline Config shift_apply(const IndexMap& phi, const Config& x) {
  require_same_index_set(phi.index_set(), x.index_set());
  switch (x.repr()) {
    case Config::Repr::Dense: {
      std::vector<Symbol> out(x.index_set().size());
      for (Index i = 0; i < out.size(); ++i) out[i] = x.at(phi.apply(i));
      return Config::dense(x.alphabet(), std::move(out));
    }
    case Config::Repr::FiniteSupport: {
      if (phi.kind() == IndexMap::Kind::ConstantMap)
        return Config::finite_support(x.alphabet(), x.at(phi.constant_target()));
      require(phi.is_bijective(), Errc::UnrepresentableResult,
              "map does not preserve the finite-support representation; "
              "use the procedural path");
      std::map<Index, Symbol> moved;
      for (auto [i, s] : x.exceptions()) moved.emplace(phi.inverse_apply(i), s);
      return Config::finite_support(x.alphabet(), x.default_symbol(), moved);
    }
    case Config::Repr::Procedural:
      break;
  }
  Config base = x;  // keep the evaluation rule alive inside the closure
  return Config::procedural(
      x.alphabet(), x.index_set(), [phi, base](Index i) { return base.at(phi.apply(i)); },
      std::nullopt);
}

/// The shifted configuration as an explicit evaluation rule, regardless of
/// the input representation.
inline Config shift_apply_procedural(const IndexMap& phi, const Config& x) {
  require_same_index_set(phi.index_set(), x.index_set());
  Config base = x;
  return Config::procedural(
      x.alphabet(), x.index_set(), [phi, base](Index i) { return base.at(phi.apply(i)); },
      std::nullopt);
}

}  // namespace gshift
