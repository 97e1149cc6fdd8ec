#pragma once

#include <stdexcept>
#include <string>

namespace salem {

enum class ErrorKind {
  TooFewDigits,
  WeightOutOfRange,
  WeightSumMismatch,
  WeightCountMismatch,
  ArgumentOutOfDomain,
  DigitOutOfRange,
  InsufficientDigits,
  NotRational,
  EndpointExcluded,
  EmptyDigitSet,
  RankTooLarge,
  DepthTooLarge,
  InsufficientPoints,
  TooFewLevels,
  ConfigError,
  UsageError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::TooFewDigits: return "TooFewDigits";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::WeightSumMismatch: return "WeightSumMismatch";
    case ErrorKind::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorKind::ArgumentOutOfDomain: return "ArgumentOutOfDomain";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::InsufficientDigits: return "InsufficientDigits";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::EndpointExcluded: return "EndpointExcluded";
    case ErrorKind::EmptyDigitSet: return "EmptyDigitSet";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::TooFewLevels: return "TooFewLevels";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "UnknownError";
}

/// Domain error with a machine-checkable kind.  Messages name the violated
/// invariant, not the call site.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace salem
