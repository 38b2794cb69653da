#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrpc {

enum class ErrorCode {
  NotPrime,
  NotLocal,
  MalformedModulus,
  RingMismatch,
  NotAUnit,
  ExtensionMismatch,
  NotIrreducible,
  AmbientMismatch,
  NotFree,
  BadRank,
  OneNotInModule,
  NoSuitableBasis,
  NotInF,
  NoInvertibleMinor,
  RankDeficient,
  GenerationFailed,
  UnsupportedRing,
  IndexOutOfRange,
  HypothesisViolated,
  ParseError,
  InvalidConfig,
  IoError,
};

const char* to_string(ErrorCode code);

/// Base exception for every error raised by the library. The code allows
/// callers (and tests) to dispatch on the failure kind without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& detail = {})
      : Error(ErrorCode::ParseError, "at position " + std::to_string(position) + ": expected " +
                                         expected + (detail.empty() ? "" : " (" + detail + ")")),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace lrpc
