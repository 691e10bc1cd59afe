#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "discstab/real_poly.hpp"

namespace discstab {

/// Roots closer than this to |z| = 1 can be neither certified in nor out.
inline constexpr double kCircleTolerance = 1e-9;

enum class CertMethod { RootLocation, ArgumentPrinciple };

/// Evidence that a polynomial (or the numerator of a disc element) has no
/// zeros on the closed unit disc. Both methods are always run; `method`
/// names the one whose test `valid()` applies.
struct UnitCertificate {
  CertMethod method = CertMethod::RootLocation;
  double min_root_modulus = std::numeric_limits<double>::infinity();
  int interior_zero_count = 0;
  double boundary_min_modulus_lower = 0.0;
  /// Certified distance from the nearest root to the closed disc.
  double margin = std::numeric_limits<double>::infinity();

  bool valid() const;
};

struct NotUnit {
  std::string reason;
  std::optional<ComplexVal> offending_root;
  int interior_zero_count = 0;
};

using UnitVerdict = std::variant<UnitCertificate, NotUnit>;

inline bool certified(const UnitVerdict& v) { return std::holds_alternative<UnitCertificate>(v); }

/// Certificate for a nonzero constant.
UnitCertificate constant_certificate(double abs_value);

/// Decide whether p has no zeros in the closed unit disc.
///
/// Roots exactly on the circle are detected exactly: gcd(p, reciprocal(p))
/// is nonconstant iff p has a zero on the circle or a pair r, 1/r, and in
/// both cases a zero lies in the closed disc. Otherwise the root-location
/// count and the argument-principle count are computed independently and
/// must agree. Throws Error{Indeterminate} when a root is within
/// kCircleTolerance of the circle or the two counts disagree.
UnitVerdict certify_unit(const RealPoly& p);

/// Winding number of t -> p(e^{it}) around 0, i.e. the number of zeros in the
/// open disc. Segments are bisected until a Lipschitz bound proves the image
/// arc stays in a half-plane; throws Error{BoundaryZero} if that needs an
/// arc shorter than ~1e-15.
int winding_count(std::span<const double> coeffs, int grid = 256);

/// Certified lower bound on min |p| over |z| = 1 (<= 0 when none provable).
double boundary_min_modulus_lower(std::span<const double> coeffs, int grid = 512);

/// Conservative root-location margin of a double polynomial: min |r| - 1 over
/// Aberth estimates (no certification). Used to score search candidates.
struct QuickRootScan {
  int interior = 0;       ///< roots with |r| <= 1
  double penalty = 0.0;   ///< sum over roots of max(0, 1 + target - |r|)
  double min_modulus = std::numeric_limits<double>::infinity();
  bool converged = true;
};
QuickRootScan quick_root_scan(std::span<const double> coeffs, double target, std::vector<ComplexVal>& warm);

}  // namespace discstab
