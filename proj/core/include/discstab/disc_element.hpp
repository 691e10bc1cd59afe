#pragma once

#include <optional>

#include "discstab/real_poly.hpp"
#include "discstab/unit_certificate.hpp"

namespace discstab {

/// Rational element num/den of the real disc algebra. The denominator is
/// certified zero-free on the closed disc.
///
/// Canonical form: gcd(num, den) = 1, all coefficients integers with joint
/// content 1, and den(0) > 0. Two elements are equal iff their canonical
/// forms are identical, so operator== is structural.
class DiscElement {
 public:
  /// The zero element.
  DiscElement();

  static DiscElement constant(const Rational& c);
  static DiscElement from_poly(const RealPoly& p);
  static DiscElement z() { return from_poly(RealPoly::z()); }
  /// Reduces num/den; throws Error{NotUnitDenominator} when the reduced
  /// denominator has a zero in the closed disc, Error{Indeterminate} when
  /// that cannot be decided.
  static DiscElement fraction(const RealPoly& num, const RealPoly& den);

  const RealPoly& num() const { return num_; }
  const RealPoly& den() const { return den_; }
  const UnitCertificate& den_cert() const { return den_cert_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value as a rational when is_constant().
  Rational constant_value() const;

  /// Exact value at a rational point (den(x) != 0 for |x| <= 1).
  Rational operator()(const Rational& x) const;

  /// Denominator modulus lower bound on the closed disc.
  double den_min_modulus() const;
  /// Upper bound for |a'| on the closed disc.
  double derivative_bound() const;

  DiscElement operator-() const;
  friend DiscElement operator+(const DiscElement& a, const DiscElement& b);
  friend DiscElement operator-(const DiscElement& a, const DiscElement& b);
  friend DiscElement operator*(const DiscElement& a, const DiscElement& b);
  friend bool operator==(const DiscElement& a, const DiscElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  DiscElement pow(unsigned exponent) const;

 private:
  DiscElement(RealPoly num, RealPoly den, UnitCertificate cert);
  static DiscElement make(RealPoly num, RealPoly den, bool reduce);

  RealPoly num_;
  RealPoly den_;
  UnitCertificate den_cert_;
};

DiscElement add(const DiscElement& a, const DiscElement& b);
DiscElement mul(const DiscElement& a, const DiscElement& b);

/// a / b when the reduced quotient lies in the algebra, otherwise nullopt.
std::optional<DiscElement> try_divide(const DiscElement& a, const DiscElement& b);

/// a / b; throws Error{NotUnitDenominator} when the quotient is not in the
/// algebra (b is not a unit and does not cancel against a).
DiscElement divide(const DiscElement& a, const DiscElement& b);

inline constexpr double kDefaultPoleFloor = 1e-300;

/// Horner evaluation of num and den; throws Error{EvalNearPole} when
/// |den(p)| < floor.
ComplexVal eval(const DiscElement& a, ComplexVal p, double floor = kDefaultPoleFloor);

struct NormBounds {
  double lo = 0.0;
  double hi = 0.0;
};

/// lo = max |a| over `grid` equispaced boundary points; hi = lo plus a
/// Lipschitz allowance for the gaps. By the maximum principle [lo, hi]
/// brackets the sup over the closed disc.
NormBounds sup_norm_boundary(const DiscElement& a, int grid = 4096);

}  // namespace discstab
