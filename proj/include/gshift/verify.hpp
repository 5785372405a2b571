#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gshift/action.hpp"
#include "gshift/enumerate.hpp"
#include "gshift/random.hpp"
#include "gshift/relations.hpp"
#include "gshift/topology.hpp"
#include "gshift/witnesses.hpp"

namespace gshift::verify {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = std::uint64_t{1} << 25;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// (alphabet size, index set size) grid shared by the exhaustive criteria
inline const std::vector<std::pair<std::size_t, Index>>& finite_grid() {
  static const std::vector<std::pair<std::size_t, Index>> grid = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
  return grid;
}

inline std::uint64_t grid_cost_estimate() {
  std::uint64_t total = 0;
  for (auto [k, n] : finite_grid()) {
    total += harness_cost_estimate(k, n, RelationKind::P, SemigroupKind::S);
    total += harness_cost_estimate(k, n, RelationKind::P, SemigroupKind::H);
    total += harness_cost_estimate(k, n, RelationKind::L, SemigroupKind::H);
  }
  return total;
}

namespace detail_v {

struct Failure {
  bool failed = false;
  std::string what;

  void note(const std::string& message) {
    if (!failed) what = message;
    failed = true;
  }
};

inline Config embed(const Config& x, const AlphabetPtr& bigger) {
  return extend_alphabet(x, bigger);
}

}  // namespace detail_v

/// 1. Oracle/decider equivalence for P over the full shift semigroup.
inline CriterionResult criterion_proximal_agreement(const VerifyOptions& options) {
  CriterionResult r{1, "proximal-oracle-vs-decider-full-semigroup", true, "", 0.0};
  std::uint64_t pairs = 0;
  for (auto [k, n] : finite_grid()) {
    HarnessReport report =
        equivalence_harness(k, n, RelationKind::P, SemigroupKind::S, {options.budget});
    pairs += report.pairs_checked;
    if (!report.mismatches.empty() ||
        report.pairs_checked != detail::pow_u64(k, 2 * static_cast<std::uint64_t>(n))) {
      r.passed = false;
      r.detail = "mismatch at alphabet " + std::to_string(k) + ", gamma " + std::to_string(n);
      return r;
    }
  }
  r.detail = std::to_string(pairs) + " ordered pairs, zero mismatches";
  return r;
}

/// 2. Diagonal laws for bijective shifts over finite index sets.
inline CriterionResult criterion_finite_diagonal(const VerifyOptions& options) {
  CriterionResult r{2, "finite-diagonal-laws", true, "", 0.0};
  for (auto [k, n] : finite_grid()) {
    for (RelationKind rel : {RelationKind::P, RelationKind::L}) {
      HarnessReport report = equivalence_harness(k, n, rel, SemigroupKind::H, {options.budget});
      const std::uint64_t diagonal = detail::pow_u64(k, n);
      if (!report.mismatches.empty() || report.true_count != diagonal) {
        r.passed = false;
        r.detail = std::string("relation ") + relation_name(rel) + " at alphabet " +
                   std::to_string(k) + ", gamma " + std::to_string(n) + ": " +
                   std::to_string(report.true_count) + " true, expected " +
                   std::to_string(diagonal);
        return r;
      }
    }
  }
  r.detail = "true exactly on the diagonal for P and L under H";
  return r;
}

/// 3. The regional relation coincides with the proximal one over finite
/// index sets, at decider level, for both semigroups.
inline CriterionResult criterion_regional_equals_proximal(const VerifyOptions&) {
  CriterionResult r{3, "regional-equals-proximal-finite", true, "", 0.0};
  std::uint64_t pairs = 0;
  for (auto [k, n] : finite_grid()) {
    AlphabetPtr alphabet = letters_alphabet(k);
    detail_v::Failure failure;
    detail::for_each_dense_config(alphabet, n, [&](const Config& x) {
      detail::for_each_dense_config(alphabet, n, [&](const Config& y) {
        ++pairs;
        if (decide_Q(x, y, SemigroupKind::S).value != decide_P_S(x, y).value)
          failure.note("S mismatch at " + print_config(x) + " / " + print_config(y));
        if (decide_Q(x, y, SemigroupKind::H).value != decide_P_H(x, y).value)
          failure.note("H mismatch at " + print_config(x) + " / " + print_config(y));
      });
    });
    if (failure.failed) {
      r.passed = false;
      r.detail = failure.what;
      return r;
    }
  }
  r.detail = std::to_string(pairs) + " pairs, Q and P verdicts identical";
  return r;
}

/// 4. Countable deciders against their constructive witnesses.
inline CriterionResult criterion_countable_witness_coherence(const VerifyOptions& options) {
  CriterionResult r{4, "countable-deciders-vs-witnesses", true, "", 0.0};
  Rng rng(options.seed);
  AlphabetPtr alphabet = letters_alphabet(2);
  std::uint64_t matched = 0, regional = 0;
  for (int i = 0; i < 100; ++i) {
    Config x = random_finite_support_config(rng, alphabet);
    Config y = random_finite_support_config(rng, alphabet);
    for (Index depth = 1; depth <= 8; ++depth) {
      Window window = Window::prefix(depth);
      if (decide_Q(x, y, SemigroupKind::H).value) {
        ++regional;
        WitnessTrace trace = witness_Q_infinite(x, y, 0, window, 256);
        if (!trace.valid()) {
          r.passed = false;
          r.detail = "regional witness failed at instance " + std::to_string(i) + ", depth " +
                     std::to_string(depth);
          return r;
        }
      }
      if (decide_P_H(x, y).value && !(x == y)) {
        ++matched;
        WitnessTrace trace = witness_P_H_countable(x, y, window, 256);
        if (!trace.valid()) {
          r.passed = false;
          r.detail = "matching witness failed at instance " + std::to_string(i) + ", depth " +
                     std::to_string(depth);
          return r;
        }
      }
    }
  }
  r.detail = std::to_string(regional) + " regional and " + std::to_string(matched) +
             " matching validations";
  return r;
}

/// 5. Swap refutation on pairs with differing defaults.
inline CriterionResult criterion_syndetic_refutation(const VerifyOptions& options) {
  CriterionResult r{5, "syndetic-refutation", true, "", 0.0};
  Rng rng(options.seed + 1);
  AlphabetPtr alphabet = letters_alphabet(2);
  for (int i = 0; i < 50; ++i) {
    Config x = random_finite_support_config(rng, alphabet, 0, {});
    Config y = random_finite_support_config(rng, alphabet, 1, {});
    Window window = Window::prefix(static_cast<Index>(i % 6) + 1);
    WitnessTrace trace = witness_L_violation(x, y, 0, 1, window);
    if (!trace.valid() || decide_L_H(x, y).value) {
      r.passed = false;
      r.detail = "instance " + std::to_string(i);
      return r;
    }
  }
  r.detail = "50 refutation traces validated; decider refuted every pair";
  return r;
}

/// 6. Block-partition witness on equal-default pairs.
inline CriterionResult criterion_block_construction(const VerifyOptions& options) {
  CriterionResult r{6, "block-construction", true, "", 0.0};
  Rng rng(options.seed + 2);
  AlphabetPtr alphabet = letters_alphabet(2);
  for (int i = 0; i < 50; ++i) {
    Symbol def = rng.symbol(*alphabet);
    Config x = random_finite_support_config(rng, alphabet, def, {});
    Config y = random_finite_support_config(rng, alphabet, def, {});
    for (Index depth = 1; depth <= 6; ++depth) {
      WitnessTrace trace = witness_P_H_blocks(x, y, Window::prefix(depth), 512);
      if (!trace.valid()) {
        r.passed = false;
        r.detail = "instance " + std::to_string(i) + ", depth " + std::to_string(depth);
        return r;
      }
    }
  }
  r.detail = "50 instances validated at depths 1..6, partition checks included";
  return r;
}

/// 7. Composition law and the homeomorphism criterion, exhaustively.
inline CriterionResult criterion_algebraic_laws(const VerifyOptions&) {
  CriterionResult r{7, "algebraic-laws", true, "", 0.0};
  AlphabetPtr alphabet = letters_alphabet(2);
  for (Index n = 1; n <= 3; ++n) {
    detail_v::Failure failure;
    detail::for_each_dense_map(n, [&](const IndexMap& phi) {
      detail::for_each_dense_map(n, [&](const IndexMap& psi) {
        IndexMap chi = compose_index_maps(phi, psi);
        detail::for_each_dense_config(alphabet, n, [&](const Config& x) {
          if (!(shift_apply(phi, shift_apply(psi, x)) == shift_apply(chi, x)))
            failure.note("composition law broke at gamma " + std::to_string(n));
        });
      });
      // the shift is injective on configurations iff the map is surjective;
      // brute-force the image to confirm the bijectivity criterion
      std::set<std::vector<Symbol>> images;
      std::uint64_t total = 0;
      detail::for_each_dense_config(alphabet, n, [&](const Config& x) {
        ++total;
        images.insert(shift_apply(phi, x).values());
      });
      const bool sigma_bijective = images.size() == total;
      if (sigma_bijective != is_homeomorphism(phi, *alphabet, phi.index_set()))
        failure.note("homeomorphism criterion broke at gamma " + std::to_string(n));
    });
    if (failure.failed) {
      r.passed = false;
      r.detail = failure.what;
      return r;
    }
  }
  r.detail = "composition and homeomorphism laws hold for gamma sizes 1..3";
  return r;
}

/// 8. Disagreement cardinality under permutations, finite and countable.
inline CriterionResult criterion_disagreement_invariance(const VerifyOptions& options) {
  CriterionResult r{8, "disagreement-invariance", true, "", 0.0};
  for (auto [k, n] : finite_grid()) {
    AlphabetPtr alphabet = letters_alphabet(k);
    detail_v::Failure failure;
    detail::for_each_dense_config(alphabet, n, [&](const Config& x) {
      detail::for_each_dense_config(alphabet, n, [&](const Config& y) {
        const auto base = disagreement(x, y).indices().size();
        detail::for_each_permutation_map(n, [&](const IndexMap& phi) {
          if (disagreement(shift_apply(phi, x), shift_apply(phi, y)).indices().size() != base)
            failure.note("cardinality moved at alphabet " + std::to_string(k) + ", gamma " +
                         std::to_string(n));
        });
      });
    });
    if (failure.failed) {
      r.passed = false;
      r.detail = failure.what;
      return r;
    }
  }
  Rng rng(options.seed + 3);
  AlphabetPtr alphabet = letters_alphabet(2);
  for (int i = 0; i < 100; ++i) {
    Config x = random_finite_support_config(rng, alphabet);
    Config y = random_finite_support_config(rng, alphabet);
    IndexMap phi = random_finite_support_permutation(rng, 8, 64);
    AgreementSummary before = disagreement(x, y);
    AgreementSummary after = disagreement(shift_apply(phi, x), shift_apply(phi, y));
    if (before.kind() != after.kind() ||
        before.indices().size() != after.indices().size()) {
      r.passed = false;
      r.detail = "kind or cardinality moved at countable instance " + std::to_string(i);
      return r;
    }
  }
  r.detail = "exhaustive finite grid plus 100 countable permutations";
  return r;
}

/// 9. Collapse preservation at decider level.
inline CriterionResult criterion_collapse_preservation(const VerifyOptions& options) {
  CriterionResult r{9, "collapse-preservation", true, "", 0.0};
  Rng rng(options.seed + 4);
  AlphabetPtr alphabet = letters_alphabet(2);
  for (int i = 0; i < 100; ++i) {
    Config x = random_finite_support_config(rng, alphabet);
    Config y = random_finite_support_config(rng, alphabet);
    Config u = random_finite_support_config(rng, alphabet);
    Symbol p = rng.symbol(*alphabet), q = rng.symbol(*alphabet);
    auto [z, w] = collapse_pair(x, y, u, p, q);
    if ((decide_P_H(x, y).value && !decide_P_H(z, w).value) ||
        (decide_L_H(x, y).value && !decide_L_H(z, w).value)) {
      r.passed = false;
      r.detail = "countable instance " + std::to_string(i);
      return r;
    }
  }
  AlphabetPtr two = letters_alphabet(2);
  detail_v::Failure failure;
  detail::for_each_dense_config(two, 2, [&](const Config& x) {
    detail::for_each_dense_config(two, 2, [&](const Config& y) {
      detail::for_each_dense_config(two, 2, [&](const Config& u) {
        for (Symbol p = 0; p < 2; ++p)
          for (Symbol q = 0; q < 2; ++q) {
            auto [z, w] = collapse_pair(x, y, u, p, q);
            if ((decide_P_H(x, y).value && !decide_P_H(z, w).value) ||
                (decide_L_H(x, y).value && !decide_L_H(z, w).value))
              failure.note("finite quintuple broke preservation");
          }
      });
    });
  });
  if (failure.failed) {
    r.passed = false;
    r.detail = failure.what;
    return r;
  }
  r.detail = "100 countable quintuples plus the exhaustive finite case";
  return r;
}

/// 10. Verdicts are invariant under embedding into a larger alphabet.
inline CriterionResult criterion_alphabet_embedding(const VerifyOptions&) {
  CriterionResult r{10, "alphabet-embedding", true, "", 0.0};
  AlphabetPtr small = letters_alphabet(2);
  AlphabetPtr big = letters_alphabet(3);
  detail_v::Failure failure;
  const std::vector<std::pair<RelationKind, SemigroupKind>> combos = {
      {RelationKind::P, SemigroupKind::S}, {RelationKind::P, SemigroupKind::H},
      {RelationKind::Q, SemigroupKind::S}, {RelationKind::Q, SemigroupKind::H},
      {RelationKind::L, SemigroupKind::H}};
  detail::for_each_dense_config(small, 2, [&](const Config& x) {
    detail::for_each_dense_config(small, 2, [&](const Config& y) {
      Config ex = detail_v::embed(x, big);
      Config ey = detail_v::embed(y, big);
      for (auto [rel, kind] : combos) {
        if (oracle_for(rel, kind, x, y).value != oracle_for(rel, kind, ex, ey).value)
          failure.note("oracle verdict moved under embedding");
        if (decide_for(rel, kind, x, y).value != decide_for(rel, kind, ex, ey).value)
          failure.note("decider verdict moved under embedding");
      }
    });
  });
  if (failure.failed) {
    r.passed = false;
    r.detail = failure.what;
    return r;
  }
  r.detail = "all oracle and decider verdicts unchanged on the embedded 4x4 grid";
  return r;
}

inline std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {}) {
  using Criterion = std::function<CriterionResult(const VerifyOptions&)>;
  const std::vector<Criterion> criteria = {
      criterion_proximal_agreement,    criterion_finite_diagonal,
      criterion_regional_equals_proximal, criterion_countable_witness_coherence,
      criterion_syndetic_refutation,   criterion_block_construction,
      criterion_algebraic_laws,        criterion_disagreement_invariance,
      criterion_collapse_preservation, criterion_alphabet_embedding,
  };
  std::vector<CriterionResult> results;
  results.reserve(criteria.size());
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult result = criterion(options);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace gshift::verify
