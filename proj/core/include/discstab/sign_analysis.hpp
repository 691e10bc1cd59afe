#pragma once

#include <vector>

#include "discstab/bezout.hpp"
#include "discstab/disc_element.hpp"

namespace discstab {

/// Closed interval [lo, hi] holding exactly one real root of `factor`
/// (lo == hi for an exact rational root).
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  /// Squarefree polynomial with that root as its only root in [lo, hi].
  RealPoly factor;

  bool exact() const { return lo == hi; }
  double midpoint() const;
};

/// Narrow the interval by one bisection step, keeping the root inside.
void bisect(IsolatingInterval& x);

/// Exact isolation of the real roots of p in [lo, hi] via Sturm sequences of
/// the squarefree factors, each interval narrower than 1e-12. Sorted by lo.
std::vector<IsolatingInterval> real_roots_interval(const RealPoly& p, const Rational& lo, const Rational& hi);

enum class PivotSource { F1Pivot, G1Pivot };

struct SingularPoint {
  IsolatingInterval x;
  double lambda = 0.0;
  /// |lambda - true value| <= lambda_error.
  double lambda_error = 0.0;
  PivotSource source = PivotSource::F1Pivot;
};

enum class SignLinkVerdict { SignLinked, NotSignLinked, NoSingularPoints };

struct SignReport {
  /// f1 g2 - f2 g1
  DiscElement determinant;
  std::vector<SingularPoint> points;
  SignLinkVerdict verdict = SignLinkVerdict::NoSingularPoints;
  /// The determinant vanishes identically (proportional pairs).
  bool proportional = false;

  bool linked() const { return verdict != SignLinkVerdict::NotSignLinked; }
};

/// f1 g2 - f2 g1
DiscElement determinant(const ElementPair& pair1, const ElementPair& pair2);

/// lambda(x) with (f2, g2) = lambda (f1, g1) at the root isolated by x.
/// The interval is refined (at most 200 bisections) until the sign of lambda
/// is certified; throws Error{DegeneratePivot} otherwise.
SingularPoint lambda_at(const ElementPair& pair1, const ElementPair& pair2, const IsolatingInterval& x);

/// Throws Error{NotInvertiblePair} when either pair fails the corona test.
SignReport is_sign_linked(const ElementPair& pair1, const ElementPair& pair2);

struct ZeroSign {
  IsolatingInterval x;
  int sign = 0;
};

struct ConstantSignVerdict {
  bool holds = true;
  /// Real zeros of g in [-1, 1] and the certified sign of f there.
  std::vector<ZeroSign> zeros;
};

/// Does f keep one strict sign on the real zeros of g in [-1, 1]?
ConstantSignVerdict constant_sign_on_real_zeros(const DiscElement& f, const DiscElement& g);

/// constant_sign_on_real_zeros(f, g) and constant_sign_on_real_zeros(g, f).
bool parity_interlacing(const DiscElement& f, const DiscElement& g);

const char* to_string(SignLinkVerdict v);
const char* to_string(PivotSource s);

}  // namespace discstab
