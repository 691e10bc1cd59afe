#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "discstab/disc_element.hpp"
#include "discstab/unit_certificate.hpp"

namespace discstab {

/// Zeros of num(a) in the open disc by the argument principle. Throws
/// Error{BoundaryZero} when a numerator root lies within kCircleTolerance of
/// the circle.
int count_zeros_disc(const DiscElement& a, int grid = 256);
int count_zeros_disc(const RealPoly& p, int grid = 256);

/// Unit test in the algebra: num(a) must be zero-free on the closed disc.
/// Throws Error{InvalidArgument} for the zero element and
/// Error{Indeterminate} on near-circle roots.
UnitVerdict is_unit(const DiscElement& a);
inline UnitVerdict is_unit(const RealPoly& p) { return certify_unit(p); }

enum class CoronaWitness {
  NoCommonRoots,   ///< delta_lower from the Bezout identity 1 = <x, f>
  GridLowerBound,  ///< delta_lower from the polar grid scan
};

struct CoronaCertificate {
  double delta_lower = 0.0;
  CoronaWitness witness_kind = CoronaWitness::NoCommonRoots;
  /// Monic gcd of the numerators (a unit).
  RealPoly common_factor;
};

struct NotInvertible {
  std::optional<ComplexVal> common_root;
  std::string reason;
};

using CoronaVerdict = std::variant<CoronaCertificate, NotInvertible>;

inline bool certified(const CoronaVerdict& v) { return std::holds_alternative<CoronaCertificate>(v); }

struct PolarGrid {
  int radii = 128;
  int angles = 512;
};

/// Corona test for a pair: invertible iff the numerators share no zero in the
/// closed disc (exact gcd). delta_lower is a certified lower bound for
/// |f| + |g| on the closed disc.
CoronaVerdict is_invertible_pair(const DiscElement& f, const DiscElement& g, PolarGrid grid = {});

CoronaVerdict is_invertible_tuple(std::span<const DiscElement> fs, PolarGrid grid = {});

/// Some x with sum x_i f_i = 1 when the tuple is invertible, otherwise
/// nullopt. Built from the extended gcd of the numerators.
std::optional<std::vector<DiscElement>> corona_witness(std::span<const DiscElement> fs);

/// Certified lower bound of sum |f_i| over a polar grid of the closed disc
/// (may be <= 0 when the grid is too coarse to prove anything).
double polar_grid_lower_bound(std::span<const DiscElement> fs, PolarGrid grid = {});

}  // namespace discstab
