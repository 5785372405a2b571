#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "gshift/alphabet.hpp"
#include "gshift/error.hpp"
#include "gshift/index_set.hpp"

namespace gshift {

/// A point of X^Gamma in one of three representations:
///  - Dense: an explicit tuple over a finite index set,
///  - FiniteSupport: a default symbol plus finitely many exceptions over the
///    naturals, stored canonically (no exception ever equals the default),
///  - Procedural: a total evaluation rule, used inside witness constructions.
///
/// Values are immutable after construction.
class Config {
public:
  enum class Repr { Dense, FiniteSupport, Procedural };

  static Config dense(AlphabetPtr alphabet, std::vector<Symbol> values) {
    require(alphabet != nullptr, Errc::InvalidArgument, "null alphabet");
    require(!values.empty(), Errc::InvalidArgument, "dense config needs at least one entry");
    for (Symbol s : values)
      require(s < alphabet->size(), Errc::InvalidArgument, "symbol id outside alphabet");
    Config c(std::move(alphabet), IndexSet::finite(values.size()));
    c.repr_ = DenseData{std::move(values)};
    return c;
  }

  static Config finite_support(AlphabetPtr alphabet, Symbol default_symbol,
                               const std::map<Index, Symbol>& exceptions = {}) {
    require(alphabet != nullptr, Errc::InvalidArgument, "null alphabet");
    require(default_symbol < alphabet->size(), Errc::InvalidArgument,
            "default symbol outside alphabet");
    FiniteSupportData data;
    data.default_symbol = default_symbol;
    for (auto [idx, sym] : exceptions) {
      require(sym < alphabet->size(), Errc::InvalidArgument, "exception symbol outside alphabet");
      if (sym != default_symbol) data.exceptions.emplace(idx, sym);
    }
    Config c(std::move(alphabet), IndexSet::countable());
    c.repr_ = std::move(data);
    return c;
  }

  /// The constant configuration; Dense over finite index sets,
  /// FiniteSupport over the naturals.
  static Config constant(AlphabetPtr alphabet, const IndexSet& gamma, Symbol s) {
    if (gamma.is_finite())
      return dense(std::move(alphabet), std::vector<Symbol>(gamma.size(), s));
    return finite_support(std::move(alphabet), s);
  }

  static Config procedural(AlphabetPtr alphabet, const IndexSet& gamma,
                           std::function<Symbol(Index)> rule,
                           std::optional<Index> support_bound = std::nullopt) {
    require(alphabet != nullptr, Errc::InvalidArgument, "null alphabet");
    require(rule != nullptr, Errc::InvalidArgument, "null evaluation rule");
    Config c(std::move(alphabet), gamma);
    c.repr_ = ProceduralData{std::move(rule), support_bound};
    return c;
  }

  Repr repr() const { return static_cast<Repr>(repr_.index()); }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  const IndexSet& index_set() const { return gamma_; }

  Symbol at(Index i) const {
    require(gamma_.contains(i), Errc::InvalidArgument, "index outside index set");
    if (const auto* d = std::get_if<DenseData>(&repr_)) return d->values[i];
    if (const auto* f = std::get_if<FiniteSupportData>(&repr_)) {
      auto it = f->exceptions.find(i);
      return it == f->exceptions.end() ? f->default_symbol : it->second;
    }
    const auto& p = std::get<ProceduralData>(repr_);
    Symbol s = p.rule(i);
    require(s < alphabet_->size(), Errc::InvalidArgument, "procedural rule left the alphabet");
    return s;
  }

  const std::vector<Symbol>& values() const {
    const auto* d = std::get_if<DenseData>(&repr_);
    require(d != nullptr, Errc::UnsupportedRepresentation, "values() on a non-dense config");
    return d->values;
  }

  Symbol default_symbol() const {
    const auto* f = std::get_if<FiniteSupportData>(&repr_);
    require(f != nullptr, Errc::UnsupportedRepresentation,
            "default_symbol() on a non-finite-support config");
    return f->default_symbol;
  }

  const std::map<Index, Symbol>& exceptions() const {
    const auto* f = std::get_if<FiniteSupportData>(&repr_);
    require(f != nullptr, Errc::UnsupportedRepresentation,
            "exceptions() on a non-finite-support config");
    return f->exceptions;
  }

  /// Declared support bound of a procedural config; nullopt means unbounded.
  std::optional<Index> support_bound() const {
    const auto* p = std::get_if<ProceduralData>(&repr_);
    require(p != nullptr, Errc::UnsupportedRepresentation,
            "support_bound() on a non-procedural config");
    return p->support_bound;
  }

  bool is_procedural() const { return repr() == Repr::Procedural; }

  /// Structural equality. Canonical storage makes this coincide with
  /// pointwise equality for Dense and FiniteSupport; procedural configs
  /// have no decidable equality.
  friend bool operator==(const Config& a, const Config& b) {
    require(!a.is_procedural() && !b.is_procedural(), Errc::UnsupportedRepresentation,
            "equality of procedural configs is undecidable");
    if (a.gamma_ != b.gamma_ || *a.alphabet_ != *b.alphabet_) return false;
    if (const auto* d = std::get_if<DenseData>(&a.repr_))
      return d->values == std::get<DenseData>(b.repr_).values;
    const auto& fa = std::get<FiniteSupportData>(a.repr_);
    const auto& fb = std::get<FiniteSupportData>(b.repr_);
    return fa.default_symbol == fb.default_symbol && fa.exceptions == fb.exceptions;
  }
  friend bool operator!=(const Config& a, const Config& b) { return !(a == b); }

private:
  // no default member initializers: gcc 11 and variant alternatives (PR c++/96645)
  struct DenseData {
    std::vector<Symbol> values;
  };
  struct FiniteSupportData {
    Symbol default_symbol;
    std::map<Index, Symbol> exceptions;
  };
  struct ProceduralData {
    std::function<Symbol(Index)> rule;
    std::optional<Index> support_bound;
  };

  Config(AlphabetPtr alphabet, IndexSet gamma) : alphabet_(std::move(alphabet)), gamma_(gamma) {}

  AlphabetPtr alphabet_;
  IndexSet gamma_;
  std::variant<DenseData, FiniteSupportData, ProceduralData> repr_;
};

inline void require_compatible(const Config& x, const Config& y) {
  require_same_index_set(x.index_set(), y.index_set());
  require_same_alphabet(x.alphabet(), y.alphabet());
}

}  // namespace gshift
