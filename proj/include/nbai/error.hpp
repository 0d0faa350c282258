#pragma once

#include <stdexcept>
#include <string>

namespace nbai {

enum class ErrorCode {
  EqualMeans,
  InvalidBounds,
  NoObservations,
  OutOfOrder,
  NonPositiveSigma,
  NonPositiveVariance,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nbai
