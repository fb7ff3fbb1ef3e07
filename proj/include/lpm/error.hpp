#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lpm {

enum class Errc {
  LengthMismatch,
  RankMismatch,
  PathsCross,
  InvalidRuns,
  InvalidValue,
  TooLarge,
  DimensionMismatch,
  Disconnected,
  NotInPolytope,
  NotInQ,
  NonIntegral,
  IndexOutOfRange,
  NotNaturallyLabeled,
  ParseError,
  MethodInapplicable,
  UnknownSuite,
  VerificationFailed,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace lpm
