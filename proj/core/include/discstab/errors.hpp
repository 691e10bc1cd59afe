#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace discstab {

enum class ErrorKind {
  InvalidArgument,
  EvalNearPole,
  NoConvergence,
  BoundaryZero,
  Indeterminate,
  NotUnitDenominator,
  NotInvertiblePair,
  NotInvertible,
  IdentityViolated,
  NotASolution,
  NotAntisymmetric,
  InconsistentSolutions,
  DimensionMismatch,
  DegeneratePivot,
  ReducibilityViolated,
  NotSignLinked,
  BudgetExhausted,
  NoAdmissibleValue,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the CLI
// exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the heuristic searches when the evaluation budget runs out.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& message, int evaluations, double best_margin)
      : Error(ErrorKind::BudgetExhausted, message),
        evaluations_(evaluations),
        best_margin_(best_margin) {}

  int evaluations() const noexcept { return evaluations_; }
  double best_margin() const noexcept { return best_margin_; }

 private:
  int evaluations_;
  double best_margin_;
};

}  // namespace discstab
