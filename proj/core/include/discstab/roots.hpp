#pragma once

#include <span>
#include <vector>

#include "discstab/real_poly.hpp"

namespace discstab {

/// Largest degree accepted by the root finder.
inline constexpr int kMaxRootDegree = 64;

struct Root {
  ComplexVal value;
  int multiplicity = 1;
  /// Radius of an inclusion disc around `value`; the union of all discs
  /// contains every root, each connected component as many as it has discs.
  double radius = 0.0;
};

/// All complex roots of a nonzero polynomial with exact multiplicities.
///
/// The polynomial is first split into squarefree factors over the rationals,
/// so each factor has simple roots and the reported multiplicities are exact.
/// Each factor is solved by Aberth-Ehrlich iteration from a rotated ring;
/// conjugate pairs are matched and averaged at the
/// end so non-real roots come out exactly paired. Output is sorted by modulus
/// then argument. Throws Error{NoConvergence} when the iteration budget runs
/// out with some residual above `tol`.
std::vector<Root> roots(const RealPoly& p, double tol = 1e-12);

/// Aberth-Ehrlich iteration on double coefficients (ascending order, nonzero
/// leading coefficient). `estimates` is used as a warm start when it already
/// holds deg(p) values. Returns false when not converged within the budget.
/// Intended for inner loops of the searches.
bool aberth(std::span<const double> coeffs, std::vector<ComplexVal>& estimates, int max_iterations = 120);

}  // namespace discstab
