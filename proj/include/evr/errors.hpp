#pragma once

#include <stdexcept>
#include <string>

namespace evr {

enum class ErrorKind {
  InvalidParameter,
  RadiusUnreachable,
  TargetUnreachable,
  DegenerateProfile,
  UnclassifiableProfile,
  NoSignChange,
  RootCountUnexpected,
  EmptyGraph,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::RadiusUnreachable: return "RadiusUnreachable";
    case ErrorKind::TargetUnreachable: return "TargetUnreachable";
    case ErrorKind::DegenerateProfile: return "DegenerateProfile";
    case ErrorKind::UnclassifiableProfile: return "UnclassifiableProfile";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::RootCountUnexpected: return "RootCountUnexpected";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Bad input as opposed to a numerical failure on valid input.
  bool is_validation() const noexcept {
    return kind_ == ErrorKind::InvalidParameter || kind_ == ErrorKind::EmptyGraph;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace evr
