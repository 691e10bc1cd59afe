#include "discstab/disc_element.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "discstab/errors.hpp"

namespace discstab {

namespace {

// Scale num/den jointly to coprime integer coefficients with den(0) > 0.
void normalize_scale(RealPoly& num, RealPoly& den) {
  mpz_class den_lcm = 1;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coeffs()) {
      mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (den.coeff(0) < 0) factor = -factor;
  num *= factor;
  den *= factor;
}

UnitCertificate certify_denominator(const RealPoly& den) {
  if (den.is_constant()) return constant_certificate(std::abs(den.coeff(0).get_d()));
  UnitVerdict v = certify_unit(den);
  if (auto* cert = std::get_if<UnitCertificate>(&v)) return *cert;
  throw Error(ErrorKind::NotUnitDenominator,
              "denominator vanishes in the closed disc (" + std::get<NotUnit>(v).reason + ")");
}

}  // namespace

DiscElement::DiscElement() : num_(), den_(RealPoly::constant(1)), den_cert_(constant_certificate(1.0)) {}

DiscElement::DiscElement(RealPoly num, RealPoly den, UnitCertificate cert)
    : num_(std::move(num)), den_(std::move(den)), den_cert_(cert) {}

DiscElement DiscElement::make(RealPoly num, RealPoly den, bool reduce) {
  if (den.is_zero()) throw Error(ErrorKind::NotUnitDenominator, "zero denominator");
  if (num.is_zero()) return DiscElement();
  if (reduce && !den.is_constant()) {
    RealPoly g = gcd(num, den);
    if (g.degree() >= 1) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
  }
  if (den.coeff(0) == 0) throw Error(ErrorKind::NotUnitDenominator, "denominator vanishes at the origin");
  normalize_scale(num, den);
  UnitCertificate cert = certify_denominator(den);
  return DiscElement(std::move(num), std::move(den), cert);
}

DiscElement DiscElement::constant(const Rational& c) { return make(RealPoly::constant(c), RealPoly::constant(1), false); }

DiscElement DiscElement::from_poly(const RealPoly& p) { return make(p, RealPoly::constant(1), false); }

DiscElement DiscElement::fraction(const RealPoly& num, const RealPoly& den) { return make(num, den, true); }

Rational DiscElement::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "element is not constant");
  return num_.coeff(0) / den_.coeff(0);
}

Rational DiscElement::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw Error(ErrorKind::EvalNearPole, "evaluation at a pole");
  return num_(x) / d;
}

double DiscElement::den_min_modulus() const {
  if (den_.is_constant()) return std::abs(den_.coeff(0).get_d());
  return den_cert_.boundary_min_modulus_lower;
}

double DiscElement::derivative_bound() const {
  const double m = den_min_modulus();
  return (num_.abs_derivative_sum() * den_.abs_coeff_sum() + num_.abs_coeff_sum() * den_.abs_derivative_sum()) /
         (m * m);
}

DiscElement DiscElement::operator-() const { return DiscElement(-num_, den_, den_cert_); }

DiscElement operator+(const DiscElement& a, const DiscElement& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return DiscElement::make(a.num_ + b.num_, a.den_, true);
  return DiscElement::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
}

DiscElement operator-(const DiscElement& a, const DiscElement& b) { return a + (-b); }

DiscElement operator*(const DiscElement& a, const DiscElement& b) {
  if (a.is_zero() || b.is_zero()) return DiscElement();
  const bool reduce = !(a.den_.is_constant() && b.den_.is_constant());
  return DiscElement::make(a.num_ * b.num_, a.den_ * b.den_, reduce);
}

DiscElement DiscElement::pow(unsigned exponent) const {
  return make(num_.pow(exponent), den_.pow(exponent), false);
}

DiscElement add(const DiscElement& a, const DiscElement& b) { return a + b; }
DiscElement mul(const DiscElement& a, const DiscElement& b) { return a * b; }

std::optional<DiscElement> try_divide(const DiscElement& a, const DiscElement& b) {
  if (b.is_zero()) return std::nullopt;
  try {
    return DiscElement::fraction(a.num() * b.den(), a.den() * b.num());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotUnitDenominator) return std::nullopt;
    throw;
  }
}

DiscElement divide(const DiscElement& a, const DiscElement& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotUnitDenominator, "division by the zero element");
  return DiscElement::fraction(a.num() * b.den(), a.den() * b.num());
}

ComplexVal eval(const DiscElement& a, ComplexVal p, double floor) {
  const ComplexVal d = a.den()(p);
  if (std::abs(d) < floor) throw Error(ErrorKind::EvalNearPole, "denominator below the evaluation floor");
  return a.num()(p) / d;
}

NormBounds sup_norm_boundary(const DiscElement& a, int grid) {
  if (a.is_zero()) return {0.0, 0.0};
  if (grid < 1) throw Error(ErrorKind::InvalidArgument, "grid must be positive");
  double lo = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double t = 2.0 * std::numbers::pi * k / grid;
    lo = std::max(lo, std::abs(eval(a, ComplexVal(std::cos(t), std::sin(t)))));
  }
  const double slack = a.derivative_bound() * std::numbers::pi / grid;
  return {lo, lo * (1.0 + 1e-14) + slack};
}

}  // namespace discstab
