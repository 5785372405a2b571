#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gshift/action.hpp"
#include "gshift/config.hpp"
#include "gshift/enumerate.hpp"
#include "gshift/error.hpp"
#include "gshift/index_map.hpp"
#include "gshift/topology.hpp"

namespace gshift {

/// P: proximal. Q: regionally proximal. L: syndetically proximal; L is only
/// defined for the group of bijective shifts.
enum class RelationKind { P, Q, L };

inline const char* relation_name(RelationKind r) {
  switch (r) {
    case RelationKind::P: return "P";
    case RelationKind::Q: return "Q";
    case RelationKind::L: return "L";
  }
  return "?";
}

inline void validate_relation(RelationKind relation, SemigroupKind kind) {
  require(relation != RelationKind::L || kind == SemigroupKind::H, Errc::InvalidArgument,
          "L is only defined for the bijective semigroup H");
}

enum class Method { Oracle, Decider };

struct Verdict {
  bool value = false;
  Method method = Method::Decider;
  // At most one hint, present only on constructive decider successes.
  std::optional<Index> hint_beta;
  std::optional<std::string> hint_construction;
};

namespace detail {

inline void require_finite_pair(const Config& x, const Config& y, const char* what) {
  require_compatible(x, y);
  require(x.index_set().is_finite(), Errc::InfiniteIndexSet,
          std::string(what) + " enumerates a finite index set only");
}

inline void require_decidable_pair(const Config& x, const Config& y) {
  require_compatible(x, y);
  require(!x.is_procedural() && !y.is_procedural(), Errc::UnsupportedRepresentation,
          "deciders accept dense or finite-support points only");
}

}  // namespace detail

/// Exhaustive search for one equalizing element: the pair is proximal in a
/// finite discrete phase space exactly when a single semigroup element maps
/// both points to the same image. Maps are tried in lexicographic order of
/// their dense tables and the search stops at the first success.
inline Verdict oracle_P(const Config& x, const Config& y, SemigroupKind kind) {
  detail::require_finite_pair(x, y, "oracle_P");
  Verdict v;
  v.method = Method::Oracle;
  bool found = false;
  // for_each has no early exit; the bodies are cheap enough to finish the scan
  detail::for_each_index_map(x.index_set().size(), kind, [&](const IndexMap& phi) {
    if (!found && shift_apply(phi, x) == shift_apply(phi, y)) found = true;
  });
  v.value = found;
  return v;
}

/// In a finite discrete phase space the regional-proximality approximants
/// admit a constant subnet, so Q coincides with P; the oracle delegates
/// rather than re-searching.
inline Verdict oracle_Q(const Config& x, const Config& y, SemigroupKind kind) {
  detail::require_finite_pair(x, y, "oracle_Q");
  return oracle_P(x, y, kind);
}

/// Syndetic proximality over a finite index set: every pair in the (finite,
/// hence closed) orbit of (x, y) under the bijective shifts must itself be
/// proximal.
inline Verdict oracle_L_H(const Config& x, const Config& y) {
  detail::require_finite_pair(x, y, "oracle_L_H");
  Verdict v;
  v.method = Method::Oracle;
  v.value = true;
  for (const auto& [ox, oy] : orbit_pairs(x, y, SemigroupKind::H)) {
    if (!oracle_P(ox, oy, SemigroupKind::H).value) {
      v.value = false;
      break;
    }
  }
  return v;
}

/// The pair is proximal for the full shift semigroup exactly when the two
/// points agree somewhere; the witness is the constant map onto any
/// agreement index.
inline Verdict decide_P_S(const Config& x, const Config& y) {
  detail::require_decidable_pair(x, y);
  Verdict v;
  auto beta = agreement(x, y).any_member();
  v.value = beta.has_value();
  v.hint_beta = beta;
  return v;
}

/// For bijective shifts, proximality needs an infinite agreement set (or the
/// diagonal). Over a finite index set that degenerates to equality; over the
/// naturals, finite-support points agree on an infinite set exactly when the
/// agreement summary is cofinite.
inline Verdict decide_P_H(const Config& x, const Config& y) {
  detail::require_decidable_pair(x, y);
  Verdict v;
  if (x.index_set().is_finite()) {
    v.value = (x == y);
    return v;
  }
  v.value = agreement(x, y).infinite() || x == y;
  if (v.value && !(x == y)) v.hint_construction = "MatchingWitness";
  return v;
}

/// Regional proximality is everything over an infinite index set, and equals
/// proximality over a finite one.
inline Verdict decide_Q(const Config& x, const Config& y, SemigroupKind kind) {
  detail::require_decidable_pair(x, y);
  if (!x.index_set().is_finite()) {
    Verdict v;
    v.value = true;
    v.hint_construction = "PairingDoubleShift";
    return v;
  }
  return kind == SemigroupKind::S ? decide_P_S(x, y) : decide_P_H(x, y);
}

/// Syndetic proximality for bijective shifts: a finite disagreement set over
/// the naturals, equality over a finite index set.
inline Verdict decide_L_H(const Config& x, const Config& y) {
  detail::require_decidable_pair(x, y);
  Verdict v;
  if (x.index_set().is_finite()) {
    v.value = (x == y);
    return v;
  }
  v.value = !disagreement(x, y).infinite();
  if (v.value && !(x == y)) v.hint_construction = "BlockPartitionWitness";
  return v;
}

inline Verdict oracle_for(RelationKind relation, SemigroupKind kind, const Config& x,
                          const Config& y) {
  validate_relation(relation, kind);
  switch (relation) {
    case RelationKind::P: return oracle_P(x, y, kind);
    case RelationKind::Q: return oracle_Q(x, y, kind);
    case RelationKind::L: return oracle_L_H(x, y);
  }
  raise(Errc::InvalidArgument, "unknown relation");
}

inline Verdict decide_for(RelationKind relation, SemigroupKind kind, const Config& x,
                          const Config& y) {
  validate_relation(relation, kind);
  switch (relation) {
    case RelationKind::P:
      return kind == SemigroupKind::S ? decide_P_S(x, y) : decide_P_H(x, y);
    case RelationKind::Q: return decide_Q(x, y, kind);
    case RelationKind::L: return decide_L_H(x, y);
  }
  raise(Errc::InvalidArgument, "unknown relation");
}

/// Reinterpret the same indexed values over a larger alphabet. Membership in
/// every relation is unchanged: the smaller power space sits inside the
/// larger one as a closed invariant subset.
inline Config extend_alphabet(const Config& x, const AlphabetPtr& bigger) {
  require(bigger != nullptr, Errc::InvalidArgument, "null alphabet");
  require(bigger->contains_all_of(*x.alphabet()), Errc::NotASuperset,
          "target alphabet does not contain every symbol of the source");
  auto remap = [&](Symbol s) { return *bigger->find(x.alphabet()->token(s)); };
  switch (x.repr()) {
    case Config::Repr::Dense: {
      std::vector<Symbol> out;
      out.reserve(x.values().size());
      for (Symbol s : x.values()) out.push_back(remap(s));
      return Config::dense(bigger, std::move(out));
    }
    case Config::Repr::FiniteSupport: {
      std::map<Index, Symbol> exceptions;
      for (auto [i, s] : x.exceptions()) exceptions.emplace(i, remap(s));
      return Config::finite_support(bigger, remap(x.default_symbol()), exceptions);
    }
    case Config::Repr::Procedural:
      break;
  }
  Config base = x;
  return Config::procedural(
      bigger, x.index_set(), [base, remap](Index i) { return remap(base.at(i)); },
      x.support_bound());
}

struct HarnessOptions {
  std::uint64_t budget = std::uint64_t{1} << 25;  // rough shift-application cap
};

struct HarnessMismatch {
  Config x;
  Config y;
  bool oracle = false;
  bool decider = false;
};

struct HarnessReport {
  RelationKind relation = RelationKind::P;
  SemigroupKind semigroup = SemigroupKind::S;
  AlphabetPtr alphabet;
  Index gamma = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t true_count = 0;
  std::vector<HarnessMismatch> mismatches;
};

/// Rough count of shift applications an exhaustive oracle-vs-decider sweep
/// will perform.
inline std::uint64_t harness_cost_estimate(std::size_t alphabet_size, Index gamma_size,
                                           RelationKind relation, SemigroupKind kind) {
  const std::uint64_t pairs = detail::pow_u64(alphabet_size, 2 * gamma_size);
  const std::uint64_t maps = detail::semigroup_order(gamma_size, kind);
  std::uint64_t per_pair = 2 * maps;
  if (relation == RelationKind::L) per_pair = 2 * maps + maps * 2 * maps;
  return pairs * per_pair;
}

/// Run the brute-force oracle and the characterization-based decider on
/// every ordered pair of the finite power space and report any mismatches.
inline HarnessReport equivalence_harness(std::size_t alphabet_size, Index gamma_size,
                                         RelationKind relation, SemigroupKind kind,
                                         const HarnessOptions& options = {}) {
  require(alphabet_size >= 2, Errc::InvalidArgument, "alphabet needs at least two symbols");
  require(gamma_size >= 1, Errc::InvalidArgument, "index set needs at least one element");
  validate_relation(relation, kind);
  const std::uint64_t cost = harness_cost_estimate(alphabet_size, gamma_size, relation, kind);
  require(cost <= options.budget, Errc::BudgetExceeded,
          "estimated " + std::to_string(cost) + " shift applications exceed budget " +
              std::to_string(options.budget));

  HarnessReport report;
  report.relation = relation;
  report.semigroup = kind;
  report.alphabet = letters_alphabet(alphabet_size);
  report.gamma = gamma_size;

  detail::for_each_dense_config(report.alphabet, gamma_size, [&](const Config& x) {
    detail::for_each_dense_config(report.alphabet, gamma_size, [&](const Config& y) {
      const bool oracle = oracle_for(relation, kind, x, y).value;
      const bool decider = decide_for(relation, kind, x, y).value;
      ++report.pairs_checked;
      if (decider) ++report.true_count;
      if (oracle != decider) report.mismatches.push_back({x, y, oracle, decider});
    });
  });
  return report;
}

}  // namespace gshift
