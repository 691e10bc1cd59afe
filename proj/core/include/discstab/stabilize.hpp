#pragma once

#include <vector>

#include "discstab/bezout.hpp"
#include "discstab/reduce.hpp"
#include "discstab/sign_analysis.hpp"

namespace discstab {

struct StabilizationResult {
  DiscElement alpha;
  DiscElement beta;
  /// One per pair: alpha f_j + beta g_j is a unit. The first target is the
  /// constant 1.
  std::vector<UnitCertificate> unit_certs;
  DiscElement h_used;
  ReductionStrategy strategy = ReductionStrategy::Zero;
  SignReport sign_report;
};

/// Common (alpha, beta) with alpha f1 + beta g1 = 1 and alpha f2 + beta g2 a
/// unit. Throws Error{NotInvertiblePair}, Error{NotSignLinked} (no solution
/// exists) or BudgetExhausted from the reduction search.
StabilizationResult simultaneous_stabilize(const ElementPair& pair1, const ElementPair& pair2,
                                           const SearchOptions& opts = {});

/// simultaneous_stabilize on (f1^2, g1), (f2^2, g2). Throws
/// Error{NotInvertible} when a squared pair fails the corona test, and
/// Error{NotSignLinked} only when f1 and f2 share a real zero x with
/// g1(x) g2(x) < 0.
StabilizationResult stabilize_squares(const ElementPair& pair1, const ElementPair& pair2,
                                      const SearchOptions& opts = {});

struct TotalReduceResult {
  DiscElement u;
  DiscElement v;
  Rational m;
  Rational x;
  Rational eps;
  DiscElement base_h;
  DiscElement base_v;
  UnitCertificate u_cert;
  UnitCertificate v_cert;
  /// Certified upper bounds used for the step-size constraint.
  double f_minus_m_norm = 0.0;
  double base_h_norm = 0.0;
};

/// x_1 = 1/10, x_2 = -1/10, 1/20, -1/20, 1/40, ... (`count` values).
std::vector<Rational> default_x_candidates(int count = 20);

/// Units u, v with u f + v g = 1, built from the first admissible avoided
/// value x (f - x a unit, |eps| within the step constraint). Throws
/// Error{NotInvertiblePair}, Error{ReducibilityViolated} when g changes sign
/// on the real zeros of f, Error{NoAdmissibleValue} or BudgetExhausted.
TotalReduceResult total_reduce(const DiscElement& f, const DiscElement& g, const std::vector<Rational>& x_candidates,
                               const SearchOptions& opts = {});

/// Parity interlacing, a necessary condition for total reducibility.
bool check_total_reduce_necessary(const DiscElement& f, const DiscElement& g);

}  // namespace discstab
