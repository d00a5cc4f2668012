#include "holoq/errors.hpp"

namespace holoq {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::UnknownGeneratorName: return "UnknownGeneratorName";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::LiftVerificationFailed: return "LiftVerificationFailed";
    case ErrorKind::NonIntegralIndicator: return "NonIntegralIndicator";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NonIntegralCentralCharacter: return "NonIntegralCentralCharacter";
    case ErrorKind::NonRationalCharacter: return "NonRationalCharacter";
    case ErrorKind::NonIntegralInducedAction: return "NonIntegralInducedAction";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NotPrimeOrder: return "NotPrimeOrder";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::TestDisagreement: return "TestDisagreement";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace holoq
