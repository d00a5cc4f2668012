#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holoq {

enum class ErrorKind {
  MalformedPermutation,
  EnumerationBoundExceeded,
  UnknownGeneratorName,
  PrimeDoesNotDivideOrder,
  LiftVerificationFailed,
  NonIntegralIndicator,
  ClassMismatch,
  NotAModule,
  NegativeMultiplicity,
  NotIrreducible,
  NonIntegralCentralCharacter,
  NonRationalCharacter,
  NonIntegralInducedAction,
  NotStable,
  RankMismatch,
  GroupMismatch,
  NotPrimeOrder,
  GroupTooLarge,
  InvalidCocycle,
  TestDisagreement,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this type; kind() identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace holoq
