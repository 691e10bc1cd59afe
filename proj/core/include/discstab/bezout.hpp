#pragma once

#include <span>
#include <vector>

#include "discstab/cert.hpp"
#include "discstab/disc_element.hpp"

namespace discstab {

/// Convenience holder for corona data (f, g).
struct ElementPair {
  DiscElement f;
  DiscElement g;
};

/// alpha f + beta g = 1 for the pair it was produced from.
struct BezoutSolution {
  DiscElement alpha;
  DiscElement beta;
  bool exact = true;
};

/// Polynomial with complex rational coefficients stored as re + i*im.
struct ComplexPoly {
  RealPoly re;
  RealPoly im;
};

/// Complex-coefficient candidate solution of alpha f + beta g = 1.
struct ComplexPolyPair {
  ComplexPoly alpha;
  ComplexPoly beta;
};

/// Exact Bezout solution in the rational subalgebra.
///
/// With f = p/q and g = r/s, extended Euclid gives a p + b r = d where every
/// root of d lies outside the closed disc; then alpha = a q / d and
/// beta = b s / d. Throws Error{NotInvertiblePair} when the numerators share
/// a zero in the closed disc.
BezoutSolution solve_bezout(const DiscElement& f, const DiscElement& g);

/// Real-symmetrisation of a complex solution: coefficientwise
/// (c + conj(c)) / 2, i.e. the real parts. Throws Error{IdentityViolated}
/// unless the input satisfies alpha f + beta g = 1 exactly.
BezoutSolution symmetrize(const ComplexPolyPair& solution, const DiscElement& f, const DiscElement& g);

using Tuple = std::vector<DiscElement>;
using Matrix = std::vector<std::vector<DiscElement>>;

/// <x, f> = sum x_i f_i
DiscElement inner(std::span<const DiscElement> x, std::span<const DiscElement> f);

/// y = x + H f for an antisymmetric H. Throws Error{NotASolution} unless
/// <x, f> = 1, Error{NotAntisymmetric} unless H = -H^T, and
/// Error{DimensionMismatch} on shape errors.
Tuple transform_solution(const Tuple& x, const Tuple& f, const Matrix& h);

/// Pair form: (alpha + h g, beta - h f).
BezoutSolution transform_solution(const BezoutSolution& x, const ElementPair& f, const DiscElement& h);

/// The h with transform_solution(x, f, h) = y. Computed as (y1 - x1) / g and
/// cross-checked against -(y2 - x2) / f by exact rational-function division.
/// Throws Error{InconsistentSolutions} when the quotients disagree or do not
/// lie in the algebra.
DiscElement recover_h(const BezoutSolution& x, const BezoutSolution& y, const ElementPair& f);

struct MatrixApplication {
  Tuple g;
  DiscElement determinant;
  bool determinant_unit = false;
  bool f_invertible = false;
  /// Certified when the input was invertible and det M is a unit.
  bool g_invertible = false;
  /// <g, witness> = 1 when g_invertible (exact).
  Tuple witness;
};

/// g = M f with an invertibility report. If f is invertible with witness a
/// (<f, a> = 1) and det M is a unit, then (M^-1)^T a is a witness for g
/// because <M f, (M^-1)^T a> = <f, a>.
MatrixApplication apply_matrix(const Matrix& m, const Tuple& f);

/// Exact determinant by cofactor expansion.
DiscElement determinant(const Matrix& m);

}  // namespace discstab
