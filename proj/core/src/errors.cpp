#include "discstab/errors.hpp"

namespace discstab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EvalNearPole: return "EvalNearPole";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BoundaryZero: return "BoundaryZero";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::NotUnitDenominator: return "NotUnitDenominator";
    case ErrorKind::NotInvertiblePair: return "NotInvertiblePair";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::InconsistentSolutions: return "InconsistentSolutions";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegeneratePivot: return "DegeneratePivot";
    case ErrorKind::ReducibilityViolated: return "ReducibilityViolated";
    case ErrorKind::NotSignLinked: return "NotSignLinked";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NoAdmissibleValue: return "NoAdmissibleValue";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace discstab
