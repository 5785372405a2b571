#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gshift/action.hpp"
#include "gshift/blocks.hpp"
#include "gshift/config.hpp"
#include "gshift/error.hpp"
#include "gshift/index_map.hpp"
#include "gshift/literals.hpp"
#include "gshift/pairing.hpp"
#include "gshift/relations.hpp"
#include "gshift/topology.hpp"

namespace gshift {

enum class Construction {
  ConstantMapWitness,
  PairingDoubleShift,
  MatchingWitness,
  BlockPartitionWitness,
  SwapRefutation,
  CollapsePair,
};

inline const char* construction_name(Construction c) {
  switch (c) {
    case Construction::ConstantMapWitness: return "ConstantMapWitness";
    case Construction::PairingDoubleShift: return "PairingDoubleShift";
    case Construction::MatchingWitness: return "MatchingWitness";
    case Construction::BlockPartitionWitness: return "BlockPartitionWitness";
    case Construction::SwapRefutation: return "SwapRefutation";
    case Construction::CollapsePair: return "CollapsePair";
  }
  return "?";
}

inline std::optional<Construction> construction_from_name(std::string_view name) {
  for (Construction c :
       {Construction::ConstantMapWitness, Construction::PairingDoubleShift,
        Construction::MatchingWitness, Construction::BlockPartitionWitness,
        Construction::SwapRefutation, Construction::CollapsePair}) {
    if (name == construction_name(c)) return c;
  }
  return std::nullopt;
}

struct StructuralCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LabeledReport {
  std::string label;
  ConvergenceReport report;
};

/// A machine-checkable instantiation of one constructive argument: named
/// parameters, window-convergence certificates, and structural checks
/// (bijectivity round-trips, partition facts, decider cross-checks).
struct WitnessTrace {
  Construction construction = Construction::ConstantMapWitness;
  AlphabetPtr alphabet;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<LabeledReport> reports;
  std::vector<StructuralCheck> checks;
  std::string claim;

  bool valid() const {
    for (const auto& r : reports)
      if (!r.report.stabilized()) return false;
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline StructuralCheck check_bijection_on(const IndexMap& map, std::vector<Index> queried,
                                          std::string name) {
  std::sort(queried.begin(), queried.end());
  queried.erase(std::unique(queried.begin(), queried.end()), queried.end());
  StructuralCheck check;
  check.name = std::move(name);
  check.passed = map.is_bijective();
  if (!check.passed) {
    check.detail = "map carries no bijectivity certificate";
    return check;
  }
  for (Index i : queried) {
    if (map.inverse_apply(map.apply(i)) != i || map.apply(map.inverse_apply(i)) != i) {
      check.passed = false;
      check.detail = "inverse round-trip failed at index " + std::to_string(i);
      return check;
    }
  }
  check.detail = "inverse round-trips verified on " + std::to_string(queried.size()) + " indices";
  return check;
}

inline std::string print_window(const Window& window) {
  std::string out;
  for (Index i : window.indices()) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  }
  return out;
}

inline std::vector<Index> sample_indices(Index upto) {
  std::vector<Index> out(upto);
  for (Index i = 0; i < upto; ++i) out[i] = i;
  return out;
}

inline void require_countable_finite_support(const Config& x, const Config& y,
                                             const char* what) {
  require_compatible(x, y);
  require(!x.index_set().is_finite(), Errc::IndexSetMismatch,
          std::string(what) + " is a countable-index construction");
  require(x.repr() == Config::Repr::FiniteSupport && y.repr() == Config::Repr::FiniteSupport,
          Errc::UnsupportedRepresentation,
          std::string(what) + " needs finite-support inputs");
}

}  // namespace detail

/// Send every index to one agreement coordinate: both images collapse to the
/// same constant configuration, exactly and in one step.
inline WitnessTrace witness_P_S(const Config& x, const Config& y, Index beta) {
  require_compatible(x, y);
  require(!x.is_procedural() && !y.is_procedural(), Errc::UnsupportedRepresentation,
          "witness needs dense or finite-support inputs");
  require(x.index_set().contains(beta), Errc::InvalidArgument, "index outside index set");
  require(x.at(beta) == y.at(beta), Errc::NotAnAgreementIndex,
          "points disagree at index " + std::to_string(beta));

  WitnessTrace trace;
  trace.construction = Construction::ConstantMapWitness;
  trace.alphabet = x.alphabet();
  IndexMap psi = IndexMap::constant_map(x.index_set(), beta);
  Config image_x = shift_apply(psi, x);
  Config image_y = shift_apply(psi, y);

  trace.parameters.emplace_back("x", print_config(x));
  trace.parameters.emplace_back("y", print_config(y));
  trace.parameters.emplace_back("agreement_index", std::to_string(beta));
  trace.parameters.emplace_back("equalizer", print_index_map(psi));
  trace.parameters.emplace_back("common_image", print_config(image_x));

  StructuralCheck images;
  images.name = "images-coincide-exactly";
  images.passed = (image_x == image_y);
  images.detail = images.passed ? "both images equal the constant configuration"
                                : "images differ";
  trace.checks.push_back(std::move(images));

  trace.claim =
      "the constant map onto an agreement index equalizes the pair, so the pair is "
      "proximal for the full shift semigroup";
  return trace;
}

/// Truncate both points to finitely many lane offsets and push the
/// truncations down the lanes twice as fast as they grow: the truncations
/// approach the original pair while all their images approach one constant
/// point, witnessing regional proximality over the naturals.
inline WitnessTrace witness_Q_infinite(const Config& x, const Config& y, Symbol anchor,
                                       const Window& window, std::uint64_t bound) {
  detail::require_countable_finite_support(x, y, "PairingDoubleShift");
  require(anchor < x.alphabet()->size(), Errc::InvalidArgument, "anchor symbol outside alphabet");
  window.validate_for(x.index_set());

  const AlphabetPtr alphabet = x.alphabet();
  auto truncation_of = [alphabet, anchor](const Config& base, std::uint64_t n) {
    Config keep = base;
    return Config::procedural(
        alphabet, IndexSet::countable(),
        [keep, anchor, n](Index i) {
          auto c = pairing::lane_coords(i);
          return c.offset <= static_cast<std::int64_t>(n) ? keep.at(i) : anchor;
        },
        std::nullopt);
  };

  WitnessTrace trace;
  trace.construction = Construction::PairingDoubleShift;
  trace.alphabet = alphabet;
  trace.parameters.emplace_back("x", print_config(x));
  trace.parameters.emplace_back("y", print_config(y));
  trace.parameters.emplace_back("anchor_symbol", alphabet->token(anchor));
  trace.parameters.emplace_back("window", detail::print_window(window));
  trace.parameters.emplace_back("bound", std::to_string(bound));
  trace.parameters.emplace_back("shift_family", "pairshift(2n)");
  trace.parameters.emplace_back("truncation_rule",
                                "keep lane offsets <= n, fill the rest with the anchor");

  const Config const_anchor = Config::finite_support(alphabet, anchor);
  auto image_of = [&truncation_of](const Config& base, std::uint64_t n) {
    return shift_apply_procedural(IndexMap::pairing_shift_power(2 * static_cast<std::int64_t>(n)),
                                  truncation_of(base, n));
  };

  trace.reports.push_back(
      {"x-truncations-approach-x",
       converges_on_window([&](std::uint64_t n) { return truncation_of(x, n); }, x, window,
                           bound)});
  trace.reports.push_back(
      {"y-truncations-approach-y",
       converges_on_window([&](std::uint64_t n) { return truncation_of(y, n); }, y, window,
                           bound)});
  trace.reports.push_back(
      {"x-truncation-images-approach-anchor",
       converges_on_window([&](std::uint64_t n) { return image_of(x, n); }, const_anchor, window,
                           bound)});
  trace.reports.push_back(
      {"y-truncation-images-approach-anchor",
       converges_on_window([&](std::uint64_t n) { return image_of(y, n); }, const_anchor, window,
                           bound)});

  std::vector<Index> queried = window.indices();
  auto extra = detail::sample_indices(16);
  queried.insert(queried.end(), extra.begin(), extra.end());
  trace.checks.push_back(detail::check_bijection_on(IndexMap::pairing_shift_power(2), queried,
                                                    "double-shift-is-bijective"));

  StructuralCheck lanes;
  lanes.name = "shift-advances-every-lane";
  lanes.passed = true;
  IndexMap step = IndexMap::pairing_shift_power(1);
  for (Index lane = 0; lane < 8 && lanes.passed; ++lane)
    for (std::int64_t off = -8; off <= 8 && lanes.passed; ++off)
      if (step.apply(pairing::lane_point(lane, off)) != pairing::lane_point(lane, off + 1)) {
        lanes.passed = false;
        lanes.detail = "lane " + std::to_string(lane) + " offset " + std::to_string(off);
      }
  if (lanes.passed) lanes.detail = "verified on lanes 0..7, offsets -8..8";
  trace.checks.push_back(std::move(lanes));

  trace.claim =
      "truncations of both points converge to the pair while their images under even "
      "shift powers converge to one constant point, so the pair is regionally proximal";
  return trace;
}

/// Match the first n naturals onto the first n agreement indices and carry
/// the complements across order-preservingly: the images of both points
/// under this family agree on any window from some step on, witnessing
/// proximality for bijective shifts when the agreement set is infinite.
inline WitnessTrace witness_P_H_countable(const Config& x, const Config& y, const Window& window,
                                          std::uint64_t bound) {
  detail::require_countable_finite_support(x, y, "MatchingWitness");
  window.validate_for(x.index_set());
  AgreementSummary agree = agreement(x, y);
  require(agree.infinite(), Errc::AgreementNotInfinite,
          "the matching construction needs an infinite agreement set");

  // ascending agreement indices, precomputed far enough for every queried n
  const auto& blocked = agree.indices();
  std::vector<Index> agreement_prefix;
  agreement_prefix.reserve(bound);
  for (std::uint64_t i = 0; i < bound; ++i)
    agreement_prefix.push_back(pairing::nth_not_in(blocked, i));

  auto matching_at = [&agreement_prefix](std::uint64_t n) {
    return IndexMap::matching_extension(
        std::vector<Index>(agreement_prefix.begin(), agreement_prefix.begin() + n));
  };

  // Once n passes an index i, every later matching sends i to the (i+1)-th
  // agreement index, where the points agree; that pointwise rule is the
  // common limit.
  Config keep_x = x;
  std::vector<Index> blocked_copy = blocked;
  Config limit = Config::procedural(
      x.alphabet(), IndexSet::countable(),
      [keep_x, blocked_copy](Index i) {
        return keep_x.at(pairing::nth_not_in(blocked_copy, i));
      },
      std::nullopt);

  WitnessTrace trace;
  trace.construction = Construction::MatchingWitness;
  trace.alphabet = x.alphabet();
  trace.parameters.emplace_back("x", print_config(x));
  trace.parameters.emplace_back("y", print_config(y));
  trace.parameters.emplace_back("window", detail::print_window(window));
  trace.parameters.emplace_back("bound", std::to_string(bound));
  trace.parameters.emplace_back("matching_family", describe_index_map(matching_at(
                                    std::min<std::uint64_t>(bound, 8))));

  trace.reports.push_back(
      {"x-images-approach-common-limit",
       converges_on_window(
           [&](std::uint64_t n) { return shift_apply_procedural(matching_at(n), x); }, limit,
           window, bound)});
  trace.reports.push_back(
      {"y-images-approach-common-limit",
       converges_on_window(
           [&](std::uint64_t n) { return shift_apply_procedural(matching_at(n), y); }, limit,
           window, bound)});

  std::vector<Index> queried = window.indices();
  auto extra = detail::sample_indices(16);
  queried.insert(queried.end(), extra.begin(), extra.end());
  for (std::uint64_t n : {std::uint64_t{1}, std::min<std::uint64_t>(4, bound), bound})
    trace.checks.push_back(detail::check_bijection_on(
        matching_at(n), queried, "matching-bijective-at-step-" + std::to_string(n)));

  trace.claim =
      "the prefix matchings send every window into the agreement set from some step on, "
      "so both images converge to a common point and the pair is proximal for bijective "
      "shifts";
  return trace;
}

/// Partition the naturals into blocks that each meet the disagreement set at
/// most once, run the prefix matching inside every block simultaneously, and
/// take the union: a single family of bijections whose images of both points
/// converge to a common limit.
inline WitnessTrace witness_P_H_blocks(const Config& x, const Config& y, const Window& window,
                                       std::uint64_t bound) {
  detail::require_countable_finite_support(x, y, "BlockPartitionWitness");
  window.validate_for(x.index_set());
  AgreementSummary moved = disagreement(x, y);
  require(!moved.infinite(), Errc::DefaultsDiffer,
          "the block construction needs a finite disagreement set (equal defaults)");

  auto system = std::make_shared<const detail::BlockSystem>(moved.indices());
  auto union_at = [&system](std::uint64_t n) {
    return IndexMap::block_union_permutation(system, n);
  };

  Config keep_x = x;
  auto sys = system;
  Config limit = Config::procedural(
      x.alphabet(), IndexSet::countable(),
      [keep_x, sys](Index i) {
        return keep_x.at(sys->lane_elem(sys->anchor_of(i), sys->rank_in_block(i)));
      },
      std::nullopt);

  WitnessTrace trace;
  trace.construction = Construction::BlockPartitionWitness;
  trace.alphabet = x.alphabet();
  trace.parameters.emplace_back("x", print_config(x));
  trace.parameters.emplace_back("y", print_config(y));
  trace.parameters.emplace_back("window", detail::print_window(window));
  trace.parameters.emplace_back("bound", std::to_string(bound));
  trace.parameters.emplace_back("block_family", describe_index_map(union_at(1)));

  trace.reports.push_back(
      {"x-images-approach-common-limit",
       converges_on_window(
           [&](std::uint64_t n) { return shift_apply_procedural(union_at(n), x); }, limit,
           window, bound)});
  trace.reports.push_back(
      {"y-images-approach-common-limit",
       converges_on_window(
           [&](std::uint64_t n) { return shift_apply_procedural(union_at(n), y); }, limit,
           window, bound)});

  std::vector<Index> queried = window.indices();
  auto extra = detail::sample_indices(16);
  queried.insert(queried.end(), extra.begin(), extra.end());
  for (std::uint64_t n : {std::uint64_t{1}, bound})
    trace.checks.push_back(detail::check_bijection_on(
        union_at(n), queried, "block-union-bijective-at-step-" + std::to_string(n)));

  // every sampled index lies in the block of its own anchor and in no other
  // sampled block
  StructuralCheck partition;
  partition.name = "blocks-partition-sampled-indices";
  partition.passed = true;
  std::vector<Index> anchors;
  for (Index gamma = 0; gamma < 64; ++gamma) anchors.push_back(system->anchor_of(gamma));
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  for (Index gamma = 0; gamma < 64 && partition.passed; ++gamma) {
    Index own = system->anchor_of(gamma);
    for (Index theta : anchors) {
      const bool member = system->member_of(gamma, theta);
      if (member != (theta == own)) {
        partition.passed = false;
        partition.detail = "index " + std::to_string(gamma) + " vs block of anchor " +
                           std::to_string(theta);
        break;
      }
    }
  }
  if (partition.passed)
    partition.detail = "indices 0..63 each lie in exactly one of " +
                       std::to_string(anchors.size()) + " sampled blocks";
  trace.checks.push_back(std::move(partition));

  // the per-block matchings act inside their own block
  StructuralCheck closed;
  closed.name = "union-preserves-blocks";
  closed.passed = true;
  IndexMap probe = union_at(std::min<std::uint64_t>(bound, 3));
  for (Index gamma = 0; gamma < 64; ++gamma) {
    if (system->anchor_of(probe.apply(gamma)) != system->anchor_of(gamma)) {
      closed.passed = false;
      closed.detail = "index " + std::to_string(gamma) + " left its block";
      break;
    }
  }
  if (closed.passed) closed.detail = "verified on indices 0..63";
  trace.checks.push_back(std::move(closed));

  trace.claim =
      "per-block prefix matchings, taken in union over a partition whose blocks each meet "
      "the disagreement set at most once, drive both images to a common point; the pair is "
      "proximal for bijective shifts";
  return trace;
}

/// Swap the window coordinates with disagreement indices outside the window:
/// one bijective shift moves the separating point onto the far constant pair
/// inside any window neighbourhood, and the far pair is not proximal, so the
/// original pair cannot be syndetically proximal.
inline WitnessTrace witness_L_violation(const Config& x, const Config& y, Symbol p, Symbol q,
                                        const Window& window) {
  detail::require_countable_finite_support(x, y, "SwapRefutation");
  require(p < x.alphabet()->size() && q < x.alphabet()->size(), Errc::InvalidArgument,
          "symbols outside alphabet");
  require(p != q, Errc::AlphabetTooSmall, "refutation needs two distinct symbols");
  window.validate_for(x.index_set());
  AgreementSummary moved = disagreement(x, y);
  require(moved.infinite(), Errc::DisagreementNotInfinite,
          "the swap refutation needs an infinite disagreement set (differing defaults)");

  const AlphabetPtr alphabet = x.alphabet();
  // q across the disagreement set, p on the finite agreement part
  std::map<Index, Symbol> agree_part;
  for (Index i : moved.indices()) agree_part.emplace(i, p);
  const Config separating = Config::finite_support(alphabet, q, agree_part);
  const Config const_p = Config::finite_support(alphabet, p);
  const Config const_q = Config::finite_support(alphabet, q);

  // smallest disagreement indices disjoint from the window
  std::vector<Index> partners;
  const auto& in_window = window.indices();
  for (Index candidate = 0; partners.size() < window.size(); ++candidate) {
    if (moved.contains(candidate) &&
        !std::binary_search(in_window.begin(), in_window.end(), candidate))
      partners.push_back(candidate);
  }
  std::vector<std::pair<Index, Index>> swaps;
  for (std::size_t i = 0; i < partners.size(); ++i)
    swaps.emplace_back(in_window[i], partners[i]);
  IndexMap swap = IndexMap::swap_set(IndexSet::countable(), swaps);

  WitnessTrace trace;
  trace.construction = Construction::SwapRefutation;
  trace.alphabet = alphabet;
  trace.parameters.emplace_back("x", print_config(x));
  trace.parameters.emplace_back("y", print_config(y));
  trace.parameters.emplace_back("p", alphabet->token(p));
  trace.parameters.emplace_back("q", alphabet->token(q));
  trace.parameters.emplace_back("window", detail::print_window(window));
  trace.parameters.emplace_back("separating_point", print_config(separating));
  trace.parameters.emplace_back("swap", print_index_map(swap));

  const Config swapped = shift_apply(swap, separating);
  trace.reports.push_back({"swapped-point-matches-far-constant-on-window",
                           converges_on_window([&](std::uint64_t) { return swapped; }, const_q,
                                               window, 1)});
  trace.reports.push_back({"companion-constant-is-fixed",
                           converges_on_window(
                               [&](std::uint64_t) { return shift_apply(swap, const_p); },
                               const_p, window, 1)});

  std::vector<Index> queried = window.indices();
  queried.insert(queried.end(), partners.begin(), partners.end());
  trace.checks.push_back(detail::check_bijection_on(swap, queried, "swap-is-bijective"));

  StructuralCheck partners_far;
  partners_far.name = "partners-lie-in-disagreement-outside-window";
  partners_far.passed = true;
  for (Index b : partners) {
    if (!moved.contains(b) ||
        std::binary_search(in_window.begin(), in_window.end(), b)) {
      partners_far.passed = false;
      partners_far.detail = "bad partner " + std::to_string(b);
      break;
    }
  }
  if (partners_far.passed) partners_far.detail = std::to_string(partners.size()) + " partners";
  trace.checks.push_back(std::move(partners_far));

  StructuralCheck far_pair;
  far_pair.name = "far-constant-pair-is-not-proximal";
  far_pair.passed = !decide_P_H(const_q, const_p).value;
  far_pair.detail = "decide_P_H(const q, const p) must be false";
  trace.checks.push_back(std::move(far_pair));

  StructuralCheck decider;
  decider.name = "decider-refutes-the-pair";
  decider.passed = !decide_L_H(x, y).value;
  decider.detail = "decide_L_H(x, y) must be false";
  trace.checks.push_back(std::move(decider));

  trace.claim =
      "finite swaps place the far constant pair inside every window neighbourhood of the "
      "orbit of the separating pair; the far pair is not proximal for bijective shifts, so "
      "the original pair is not syndetically proximal";
  return trace;
}

/// Overwrite the disagreement coordinates of a carrier point with q and p
/// respectively, keeping the carrier elsewhere. Membership in the proximal
/// and syndetically proximal relations is inherited from (x, y).
inline std::pair<Config, Config> collapse_pair(const Config& x, const Config& y, const Config& u,
                                               Symbol p, Symbol q) {
  require_compatible(x, y);
  require_compatible(x, u);
  require(!x.is_procedural() && !y.is_procedural() && !u.is_procedural(),
          Errc::UnsupportedRepresentation, "collapse needs dense or finite-support inputs");
  require(p < x.alphabet()->size() && q < x.alphabet()->size(), Errc::InvalidArgument,
          "symbols outside alphabet");

  if (x.index_set().is_finite()) {
    std::vector<Symbol> zs, ws;
    const Index n = x.index_set().size();
    for (Index i = 0; i < n; ++i) {
      const bool differ = x.at(i) != y.at(i);
      zs.push_back(differ ? q : u.at(i));
      ws.push_back(differ ? p : u.at(i));
    }
    return {Config::dense(x.alphabet(), std::move(zs)), Config::dense(x.alphabet(), std::move(ws))};
  }

  AgreementSummary moved = disagreement(x, y);
  if (!moved.infinite()) {
    std::map<Index, Symbol> zs(u.exceptions()), ws(u.exceptions());
    for (Index i : moved.indices()) {
      zs[i] = q;
      ws[i] = p;
    }
    return {Config::finite_support(x.alphabet(), u.default_symbol(), zs),
            Config::finite_support(x.alphabet(), u.default_symbol(), ws)};
  }
  // cofinite disagreement: the carrier survives only on the finite agreement set
  std::map<Index, Symbol> zs, ws;
  for (Index i : moved.indices()) {
    zs[i] = u.at(i);
    ws[i] = u.at(i);
  }
  return {Config::finite_support(x.alphabet(), q, zs),
          Config::finite_support(x.alphabet(), p, ws)};
}

/// Trace wrapper around collapse_pair with decider-level preservation checks.
inline WitnessTrace collapse_pair_trace(const Config& x, const Config& y, const Config& u,
                                        Symbol p, Symbol q) {
  auto [z, w] = collapse_pair(x, y, u, p, q);
  WitnessTrace trace;
  trace.construction = Construction::CollapsePair;
  trace.alphabet = x.alphabet();
  trace.parameters.emplace_back("x", print_config(x));
  trace.parameters.emplace_back("y", print_config(y));
  trace.parameters.emplace_back("carrier", print_config(u));
  trace.parameters.emplace_back("p", x.alphabet()->token(p));
  trace.parameters.emplace_back("q", x.alphabet()->token(q));
  trace.parameters.emplace_back("z", print_config(z));
  trace.parameters.emplace_back("w", print_config(w));

  StructuralCheck prox;
  prox.name = "proximality-preserved-at-decider";
  prox.passed = !decide_P_H(x, y).value || decide_P_H(z, w).value;
  prox.detail = "decide_P_H(x,y) implies decide_P_H(z,w)";
  trace.checks.push_back(std::move(prox));

  StructuralCheck synd;
  synd.name = "syndetic-proximality-preserved-at-decider";
  synd.passed = !decide_L_H(x, y).value || decide_L_H(z, w).value;
  synd.detail = "decide_L_H(x,y) implies decide_L_H(z,w)";
  trace.checks.push_back(std::move(synd));

  trace.claim =
      "overwriting the disagreement coordinates with a fixed far pair of symbols keeps the "
      "collapsed pair inside every relation the original pair belonged to";
  return trace;
}

}  // namespace gshift
