#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gshift/action.hpp"
#include "gshift/config.hpp"
#include "gshift/enumerate.hpp"
#include "gshift/error.hpp"

namespace gshift {

/// A finite set of coordinates; agreement on windows generates the product
/// topology.
class Window {
public:
  static Window prefix(Index depth) {
    require(depth >= 1, Errc::InvalidArgument, "window needs at least one index");
    std::vector<Index> idx(depth);
    for (Index i = 0; i < depth; ++i) idx[i] = i;
    return Window(std::move(idx));
  }

  static Window of(std::vector<Index> indices) {
    require(!indices.empty(), Errc::InvalidArgument, "window needs at least one index");
    std::sort(indices.begin(), indices.end());
    require(std::adjacent_find(indices.begin(), indices.end()) == indices.end(),
            Errc::InvalidArgument, "window indices must be distinct");
    return Window(std::move(indices));
  }

  const std::vector<Index>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

  void validate_for(const IndexSet& gamma) const {
    for (Index i : indices_)
      require(gamma.contains(i), Errc::InvalidArgument,
              "window index " + std::to_string(i) + " outside index set");
  }

private:
  explicit Window(std::vector<Index> indices) : indices_(std::move(indices)) {}

  std::vector<Index> indices_;
};

/// Certificate that a sequence of configurations eventually agrees with a
/// target on a window. Convergence is only ever certified up to the checked
/// bound; a missing stabilization index distinguishes "did not stabilize
/// within the bound" from a positive certificate.
struct ConvergenceReport {
  std::vector<Index> window;
  std::optional<std::uint64_t> stabilization_index;  // least n0 with agreement on [n0, bound]
  std::vector<std::string> limit_on_window;          // target symbols, as tokens
  std::uint64_t checked_bound = 0;

  bool stabilized() const { return stabilization_index.has_value(); }
};

/// Scan seq(1..bound) against the target on the window. The stabilization
/// index is the least n0 <= bound such that every term from n0 through the
/// bound matches the target at every window index.
inline ConvergenceReport converges_on_window(const std::function<Config(std::uint64_t)>& seq,
                                             const Config& target, const Window& window,
                                             std::uint64_t bound) {
  require(bound >= 1, Errc::InvalidArgument, "bound must be at least 1");
  window.validate_for(target.index_set());

  ConvergenceReport report;
  report.window = window.indices();
  report.checked_bound = bound;
  std::vector<Symbol> want;
  want.reserve(window.size());
  for (Index i : window.indices()) {
    Symbol s = target.at(i);
    want.push_back(s);
    report.limit_on_window.push_back(target.alphabet()->token(s));
  }

  std::uint64_t last_mismatch = 0;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    Config term = seq(n);
    require_compatible(term, target);
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (term.at(report.window[k]) != want[k]) {
        last_mismatch = n;
        break;
      }
    }
  }
  if (last_mismatch < bound) report.stabilization_index = last_mismatch + 1;
  return report;
}

/// Every image of the pair under the acting semigroup, for a finite index
/// set. The phase space is finite and discrete, so this set is already the
/// orbit closure. Pairs are returned deduplicated, ordered by their dense
/// encodings.
inline std::vector<std::pair<Config, Config>> orbit_pairs(const Config& x, const Config& y,
                                                          SemigroupKind kind) {
  require_compatible(x, y);
  require(x.index_set().is_finite(), Errc::InfiniteIndexSet,
          "orbit enumeration needs a finite index set");
  const Index n = x.index_set().size();

  std::set<std::pair<std::vector<Symbol>, std::vector<Symbol>>> seen;
  detail::for_each_index_map(n, kind, [&](const IndexMap& phi) {
    seen.emplace(shift_apply(phi, x).values(), shift_apply(phi, y).values());
  });

  std::vector<std::pair<Config, Config>> out;
  out.reserve(seen.size());
  for (const auto& [vx, vy] : seen)
    out.emplace_back(Config::dense(x.alphabet(), vx), Config::dense(x.alphabet(), vy));
  return out;
}

}  // namespace gshift
