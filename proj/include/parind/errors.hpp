#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace parind {

enum class ErrorCode {
  InvalidCartan,
  NonFiniteType,
  UnknownRoot,
  UnknownLabel,
  GroupTooLarge,
  InvalidNesting,
  MixedAmbient,
  InvalidDescriptor,
  NotEMinimal,
  QOutOfRange,
  InvalidM1Triple,
  NotSupercuspidal,
  LatticeTooLarge,
};

// Coarse grouping used by the command line front-end to pick an exit code.
enum class ErrorCategory { Validation, Semantic, Resource };

std::string_view error_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  ErrorCategory category() const noexcept { return error_category(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace parind
