#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "discstab/disc_element.hpp"
#include "discstab/unit_certificate.hpp"

namespace discstab {

struct SearchOptions {
  int max_degree = 6;
  int budget = 20000;
  std::uint64_t seed = 7;
  double margin_target = 1e-6;
};

enum class ReductionStrategy { Zero, UnitDenominator, PinnedSearch };

const char* to_string(ReductionStrategy s);

/// F + h G is a unit, certified by unit_cert.
struct ReductionWitness {
  DiscElement h;
  UnitCertificate unit_cert;
  ReductionStrategy strategy = ReductionStrategy::Zero;
  int evaluations = 0;
};

/// Monic real polynomial whose roots are the zeros of num(G) in the closed
/// disc, with multiplicity. A squarefree factor with roots on both sides of
/// the circle is split over the rationals when possible; otherwise the whole
/// factor is kept, so the result always divides num(G). Throws
/// Error{Indeterminate} for roots that cannot be placed relative to the
/// circle.
RealPoly pin_polynomial(const DiscElement& g);

/// Some h with F + h G a unit of margin >= opts.margin_target.
///
/// Stages: h = 0 when F is a unit; h = (1 - F)/G when G is a unit;
/// otherwise, with F = A/B and P = pin_polynomial(G), search polynomials t
/// with deg t <= opts.max_degree making A + t P zero-free on the closed disc
/// and return h = t P / (B G). Throws Error{NotInvertiblePair} for a
/// non-invertible input, Error{ReducibilityViolated} when F changes sign on
/// the real zeros of G, and BudgetExhausted when the search fails.
ReductionWitness find_h(const DiscElement& f, const DiscElement& g, const SearchOptions& opts = {});

/// Certify a search point: snap each coordinate to a nearby simple rational
/// and return the first snapped polynomial passing the exact unit test with
/// the requested margin. `build` maps the coefficient vector to the
/// polynomial under test.
std::optional<std::vector<Rational>> snap_and_certify(const std::vector<double>& x, double margin_target,
                                                      const std::function<RealPoly(const std::vector<Rational>&)>& build,
                                                      UnitCertificate* cert_out = nullptr);

}  // namespace discstab
