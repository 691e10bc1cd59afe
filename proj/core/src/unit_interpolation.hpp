#pragma once

#include <vector>

#include "discstab/real_poly.hpp"

namespace discstab::detail {

/// Starting points t (deg t < dim) for the search for A + t P zero-free on
/// the closed disc, best first.
///
/// Every candidate comes from a zero-free target g = sigma * B * E * Pi *
/// exp(V) that agrees with A / B at the roots of P, followed by the linear
/// least-squares fit of (A + t P - g) / g = 0 on the circle (by Rouche a
/// residual below 1 leaves A + t P zero-free). The variants differ in the
/// interpolant V of log(A / B) at the nodes (polynomial, minimal-norm
/// Szego-kernel interpolant of the interior nodes, or that interpolant
/// extended polynomially through the exterior nodes), in the logarithm branch
/// at each conjugate pair, and in whether E carries the zeros of A outside
/// the disc. Pi holds real roots outside the disc that match the sign of A / B
/// at exterior real nodes.
std::vector<std::vector<double>> unit_interpolation_starts(const RealPoly& a, const RealPoly& b, const RealPoly& pin,
                                                           int dim, std::size_t keep);

}  // namespace discstab::detail
