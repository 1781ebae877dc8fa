#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qspace {

// Machine-readable failure categories. The CLI prints them as E_<NAME> and
// exits 1; InternalError means a broken invariant (a bug, not bad input) and
// maps to exit 2.
enum class ErrorCode {
  SystemMismatch,
  Domain,
  ZeroInverse,
  UnsupportedNegation,
  UnsupportedZero,
  Incommensurable,
  NonInvertible,
  ExponentOverflow,
  DuplicateSymbol,
  EmptyBasis,
  RankMismatch,
  NonUnimodular,
  NonSquare,
  UnknownSymbol,
  Syntax,
  EmptyList,
  BadFile,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& message)
      : std::logic_error(message) {}
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qspace
