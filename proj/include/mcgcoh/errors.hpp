#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcgcoh {

enum class ErrorCode {
  SubgroupNotContained,
  DependentBasis,
  DimensionMismatch,
  NotUnimodular,
  UnknownGenerator,
  SyntaxError,
  DuplicateGenerator,
  EmptyGeneratorList,
  InvalidGeneratorName,
  GenusMismatch,
  InvalidGenus,
  UnsupportedGenus,
  IndexOutOfRange,
  NotACocycle,
  NotAdaptedToS,
  NotProportional,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace mcgcoh
