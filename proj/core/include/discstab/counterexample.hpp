#pragma once

#include <array>
#include <vector>

#include "discstab/bezout.hpp"
#include "discstab/cert.hpp"
#include "discstab/reduce.hpp"
#include "discstab/sign_analysis.hpp"

namespace discstab {

/// The pairs (1, 0), (1, z^2), (n^2 z^2, 1).
struct TripleInstance {
  int n = 1;
  std::array<ElementPair, 3> pairs;
  std::array<CoronaCertificate, 3> corona;
  /// Reports for the 2-subsets {0,1}, {0,2}, {1,2}.
  std::array<SignReport, 3> sign_reports;
};

/// Throws Error{InvalidArgument} for n < 1.
TripleInstance make_triple(int n);

/// Unit verdicts for alpha, alpha + beta z^2 and n^2 alpha z^2 + beta. The
/// zero element is reported as NotUnit.
std::array<UnitVerdict, 3> verify_candidate(const TripleInstance& t, const DiscElement& alpha,
                                            const DiscElement& beta);

enum class FalsificationVerdict { NoWitnessFound, WitnessFound };

const char* to_string(FalsificationVerdict v);

struct FalsificationReport {
  int n = 1;
  /// Largest min(|r|) - 1 over the roots of 1 + h z^2 and n^2 z^2 + h
  /// reached by any searched h (negative: some root lies in the disc).
  double best_margin = -1.0;
  std::vector<Rational> best_h;
  int budget_used = 0;
  /// Candidates that passed the approximate feasibility test and went to
  /// exact certification.
  int certification_attempts = 0;
  FalsificationVerdict verdict = FalsificationVerdict::NoWitnessFound;
  /// Set when verdict == WitnessFound.
  std::optional<std::array<UnitCertificate, 3>> witness_certs;
};

/// Bounded search for a polynomial h (deg <= opts.max_degree) making
/// 1 + h z^2 and n^2 z^2 + h both units, i.e. for alpha = 1, beta = h.
/// Any unit alpha reduces to this case by dividing through by alpha.
FalsificationReport falsify(const TripleInstance& t, const SearchOptions& opts = {});

struct InterpolationConstraint {
  ComplexVal node;
  ComplexVal value;
};

/// alpha(z0) = 1 / z0^2 at the roots z0 of 1 - n^2 z^4: n at +-1/sqrt(n),
/// -n at +-i/sqrt(n).
std::vector<InterpolationConstraint> interpolation_constraints(int n);

/// phi(p) = p^2 (n^2 p^2 + h(p)) / (1 + h(p) p^2). Throws
/// Error{EvalNearPole} when |1 + h(p) p^2| < 1e-14.
ComplexVal phi_diagnostic(int n, const DiscElement& h, ComplexVal p);

}  // namespace discstab
