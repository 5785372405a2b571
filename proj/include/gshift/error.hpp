#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gshift {

enum class Errc {
  IndexSetMismatch,
  InfiniteIndexSet,
  UnrepresentableResult,
  UnrepresentableComposition,
  UnsupportedRepresentation,
  NotASuperset,
  BudgetExceeded,
  NotAnAgreementIndex,
  AgreementNotInfinite,
  DefaultsDiffer,
  DisagreementNotInfinite,
  AlphabetTooSmall,
  InvalidLiteral,
  InvalidArgument,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::IndexSetMismatch: return "IndexSetMismatch";
    case Errc::InfiniteIndexSet: return "InfiniteIndexSet";
    case Errc::UnrepresentableResult: return "UnrepresentableResult";
    case Errc::UnrepresentableComposition: return "UnrepresentableComposition";
    case Errc::UnsupportedRepresentation: return "UnsupportedRepresentation";
    case Errc::NotASuperset: return "NotASuperset";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAnAgreementIndex: return "NotAnAgreementIndex";
    case Errc::AgreementNotInfinite: return "AgreementNotInfinite";
    case Errc::DefaultsDiffer: return "DefaultsDiffer";
    case Errc::DisagreementNotInfinite: return "DisagreementNotInfinite";
    case Errc::AlphabetTooSmall: return "AlphabetTooSmall";
    case Errc::InvalidLiteral: return "InvalidLiteral";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) raise(code, message);
}

}  // namespace gshift
