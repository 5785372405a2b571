#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gshift/config.hpp"
#include "gshift/error.hpp"
#include "gshift/index_map.hpp"

namespace gshift {

namespace detail {

// Cursor over a literal; every failure reports the position and what was
// expected there.
class LiteralCursor {
public:
  explicit LiteralCursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& expected) const {
    raise(Errc::InvalidLiteral,
          "position " + std::to_string(pos_) + ": expected " + expected);
  }

  bool try_eat(char c) {
    if (done() || text_[pos_] != c) return false;
    ++pos_;
    return true;
  }

  void eat(char c) {
    if (!try_eat(c)) fail(std::string("'") + c + "'");
  }

  bool try_eat_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::uint64_t read_uint() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("a decimal index");
    std::uint64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  std::int64_t read_int() {
    bool neg = try_eat('-');
    auto v = static_cast<std::int64_t>(read_uint());
    return neg ? -v : v;
  }

  std::string read_token(std::string_view stops) {
    std::size_t start = pos_;
    while (!done() && stops.find(peek()) == std::string_view::npos) ++pos_;
    if (pos_ == start) fail("a symbol token");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_end() const {
    if (!done()) fail("end of literal");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Symbol read_symbol(LiteralCursor& cur, const Alphabet& alphabet,
                          std::string_view stops) {
  std::size_t at = cur.position();
  std::string token = cur.read_token(stops);
  auto sym = alphabet.find(token);
  if (!sym)
    raise(Errc::InvalidLiteral, "position " + std::to_string(at) + ": expected a symbol of {" +
                                    [&] {
                                      std::string s;
                                      for (const auto& t : alphabet.tokens()) {
                                        if (!s.empty()) s += ",";
                                        s += t;
                                      }
                                      return s;
                                    }() +
                                    "}, got '" + token + "'");
  return *sym;
}

}  // namespace detail

/// Dense form `a,b,b`; finite-support form `default=a` or `default=a;3:b,7:c`.
inline Config parse_config(std::string_view text, const AlphabetPtr& alphabet,
                           const IndexSet& gamma) {
  detail::LiteralCursor cur(text);
  if (cur.try_eat_word("default=")) {
    require(!gamma.is_finite(), Errc::InvalidLiteral,
            "finite-support literal over a finite index set");
    Symbol def = detail::read_symbol(cur, *alphabet, ";");
    std::map<Index, Symbol> exceptions;
    if (cur.try_eat(';')) {
      while (true) {
        std::size_t at = cur.position();
        Index idx = cur.read_uint();
        if (exceptions.count(idx))
          raise(Errc::InvalidLiteral,
                "position " + std::to_string(at) + ": duplicate exception index");
        cur.eat(':');
        exceptions.emplace(idx, detail::read_symbol(cur, *alphabet, ","));
        if (!cur.try_eat(',')) break;
      }
    }
    cur.expect_end();
    return Config::finite_support(alphabet, def, exceptions);
  }
  require(gamma.is_finite(), Errc::InvalidLiteral,
          "dense literal over a countable index set (use default=...)");
  std::vector<Symbol> values;
  values.push_back(detail::read_symbol(cur, *alphabet, ","));
  while (cur.try_eat(',')) values.push_back(detail::read_symbol(cur, *alphabet, ","));
  cur.expect_end();
  require(values.size() == gamma.size(), Errc::InvalidLiteral,
          "dense literal has " + std::to_string(values.size()) + " entries; index set has " +
              std::to_string(gamma.size()));
  return Config::dense(alphabet, std::move(values));
}

/// Canonical literal of a dense or finite-support configuration.
inline std::string print_config(const Config& x) {
  require(!x.is_procedural(), Errc::UnsupportedRepresentation,
          "procedural configs have no literal form");
  const Alphabet& a = *x.alphabet();
  if (x.repr() == Config::Repr::Dense) {
    std::string out;
    for (Symbol s : x.values()) {
      if (!out.empty()) out += ",";
      out += a.token(s);
    }
    return out;
  }
  std::string out = "default=" + a.token(x.default_symbol());
  bool first = true;
  for (auto [i, s] : x.exceptions()) {
    out += first ? ";" : ",";
    first = false;
    out += std::to_string(i) + ":" + a.token(s);
  }
  return out;
}

/// Dense `1,2,0`; swaps `swap(2,5);swap(0,9)`; `const(1)`; `pairshift(-2)`;
/// `identity`.
inline IndexMap parse_index_map(std::string_view text, const IndexSet& gamma) {
  detail::LiteralCursor cur(text);
  if (cur.try_eat_word("identity")) {
    cur.expect_end();
    return IndexMap::identity(gamma);
  }
  if (cur.try_eat_word("const(")) {
    Index beta = cur.read_uint();
    cur.eat(')');
    cur.expect_end();
    return IndexMap::constant_map(gamma, beta);
  }
  if (cur.try_eat_word("pairshift(")) {
    std::int64_t k = cur.read_int();
    cur.eat(')');
    cur.expect_end();
    require(!gamma.is_finite(), Errc::InvalidLiteral,
            "pairshift is defined over the countable index set");
    return IndexMap::pairing_shift_power(k);
  }
  if (cur.try_eat_word("swap(")) {
    std::vector<std::pair<Index, Index>> swaps;
    while (true) {
      Index i = cur.read_uint();
      cur.eat(',');
      Index j = cur.read_uint();
      cur.eat(')');
      swaps.emplace_back(i, j);
      if (!cur.try_eat(';')) break;
      if (!cur.try_eat_word("swap(")) cur.fail("'swap('");
    }
    cur.expect_end();
    return IndexMap::swap_set(gamma, swaps);
  }
  require(gamma.is_finite(), Errc::InvalidLiteral,
          "dense map literal over a countable index set");
  std::vector<Index> table;
  table.push_back(cur.read_uint());
  while (cur.try_eat(',')) table.push_back(cur.read_uint());
  cur.expect_end();
  require(table.size() == gamma.size(), Errc::InvalidLiteral,
          "dense map literal has " + std::to_string(table.size()) + " entries; index set has " +
              std::to_string(gamma.size()));
  return IndexMap::dense_table(std::move(table));
}

/// Literal of a map expressible in the grammar. Finite-support permutations
/// print as swap chains and so must be involutions; richer structured maps
/// have no literal and print via describe_index_map.
inline std::string print_index_map(const IndexMap& map) {
  using K = IndexMap::Kind;
  switch (map.kind()) {
    case K::DenseTable: {
      std::string out;
      for (Index v : map.table()) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
      }
      return out;
    }
    case K::FiniteSupportPermutation: {
      const auto& fwd = map.support_mapping();
      if (fwd.empty()) return "identity";
      std::string out;
      for (auto [i, j] : fwd) {
        require(fwd.at(j) == i, Errc::UnsupportedRepresentation,
                "finite-support permutation is not a union of swaps");
        if (i > j) continue;
        if (!out.empty()) out += ";";
        out += "swap(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      return out;
    }
    case K::ConstantMap:
      return "const(" + std::to_string(map.constant_target()) + ")";
    case K::PairingShiftPower:
      return "pairshift(" + std::to_string(map.shift_power()) + ")";
    default:
      raise(Errc::UnsupportedRepresentation, "map kind has no literal form");
  }
}

/// Human-readable summary; total over all map kinds.
inline std::string describe_index_map(const IndexMap& map) {
  using K = IndexMap::Kind;
  switch (map.kind()) {
    case K::MatchingExtension: {
      std::string out = "match-prefix(";
      const auto& t = map.matching_targets();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
      }
      return out + ");complement-order-preserving";
    }
    case K::BlockUnionPermutation: {
      std::string out = "block-union(step=" + std::to_string(map.block_step()) + ";moved=";
      const auto& b = map.block_system().disagreement();
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(b[i]);
      }
      return out + ")";
    }
    case K::FiniteSupportPermutation: {
      const auto& fwd = map.support_mapping();
      if (fwd.empty()) return "identity";
      std::string out = "perm(";
      bool first = true;
      for (auto [i, j] : fwd) {
        if (!first) out += ";";
        first = false;
        out += std::to_string(i) + ">" + std::to_string(j);
      }
      return out + ")";
    }
    default:
      return print_index_map(map);
  }
}

}  // namespace gshift
