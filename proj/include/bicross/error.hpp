#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicross {

enum class ErrorKind {
  DimensionMismatch,
  FieldMismatch,
  NotPrime,
  NotFinite,
  DivisionByZero,
  CharTwo,
  BadParameter,
  LambdaNotAdmissible,
  NotADerivation,
  InvalidTn,
  InvalidTwistedDerivation,
  InvalidMatchedPair,
  NotAFactorization,
  InvalidDeformationMap,
  BudgetExceeded,
  NotPerfect,
  InvalidTriple,
  UnknownScenario,
  Format,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace bicross
