#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "gshift/error.hpp"

namespace gshift {

/// Index of a token within its alphabet. Symbols are only comparable
/// between configurations that share an alphabet.
using Symbol = std::uint32_t;

/// Ordered finite set of at least two distinct opaque tokens.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    require(tokens_.size() >= 2, Errc::AlphabetTooSmall, "alphabet needs at least two symbols");
    std::unordered_set<std::string_view> seen;
    for (const auto& t : tokens_) {
      require(!t.empty(), Errc::InvalidArgument, "empty symbol token");
      require(seen.insert(t).second, Errc::InvalidArgument, "duplicate symbol token '" + t + "'");
    }
  }

  /// "a","b","c",... for k <= 26, then "t26","t27",...
  static Alphabet letters(std::size_t k) {
    std::vector<std::string> tokens;
    tokens.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (i < 26)
        tokens.emplace_back(1, static_cast<char>('a' + i));
      else
        tokens.push_back("t" + std::to_string(i));
    }
    return Alphabet(std::move(tokens));
  }

  std::size_t size() const { return tokens_.size(); }

  const std::string& token(Symbol s) const {
    require(s < tokens_.size(), Errc::InvalidArgument, "symbol id out of range");
    return tokens_[s];
  }

  std::optional<Symbol> find(std::string_view token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i)
      if (tokens_[i] == token) return static_cast<Symbol>(i);
    return std::nullopt;
  }

  bool contains_all_of(const Alphabet& other) const {
    for (const auto& t : other.tokens_)
      if (!find(t)) return false;
    return true;
  }

  const std::vector<std::string>& tokens() const { return tokens_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
  std::vector<std::string> tokens_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> tokens) {
  return std::make_shared<const Alphabet>(std::move(tokens));
}

inline AlphabetPtr letters_alphabet(std::size_t k) {
  return std::make_shared<const Alphabet>(Alphabet::letters(k));
}

inline void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  require(a && b && (a == b || *a == *b), Errc::IndexSetMismatch, "alphabets differ");
}

}  // namespace gshift
