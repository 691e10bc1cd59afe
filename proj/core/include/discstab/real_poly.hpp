#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "discstab/rational.hpp"

namespace discstab {

using ComplexVal = std::complex<double>;

/// Univariate polynomial with exact rational coefficients, ascending order
/// (coefficient k multiplies z^k). The zero polynomial has no coefficients and
/// the top coefficient of every other polynomial is nonzero.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<Rational> coeffs);
  RealPoly(std::initializer_list<Rational> coeffs);

  static RealPoly constant(const Rational& c);
  static RealPoly monomial(const Rational& c, int degree);
  static RealPoly z() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k, zero beyond the degree.
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  ComplexVal operator()(ComplexVal z) const;
  std::complex<long double> eval_long(std::complex<long double> z) const;

  RealPoly derivative() const;
  /// z^deg * p(1/z); roots map to their reciprocals.
  RealPoly reciprocal() const;
  RealPoly monic() const;
  /// Same polynomial up to a positive rational factor, with coprime integer
  /// coefficients.
  RealPoly primitive() const;
  /// p(-z)
  RealPoly reflect() const;

  std::vector<double> to_double() const;
  /// sum |a_k|
  double abs_coeff_sum() const;
  /// sum k |a_k| (bounds |p'| on the closed disc).
  double abs_derivative_sum() const;

  RealPoly operator-() const;
  RealPoly& operator+=(const RealPoly& rhs);
  RealPoly& operator-=(const RealPoly& rhs);
  RealPoly& operator*=(const RealPoly& rhs);
  RealPoly& operator*=(const Rational& c);

  friend RealPoly operator+(RealPoly a, const RealPoly& b) { return a += b; }
  friend RealPoly operator-(RealPoly a, const RealPoly& b) { return a -= b; }
  friend RealPoly operator*(RealPoly a, const RealPoly& b) { return a *= b; }
  friend RealPoly operator*(RealPoly a, const Rational& c) { return a *= c; }
  friend RealPoly operator*(const Rational& c, RealPoly a) { return a *= c; }
  friend bool operator==(const RealPoly& a, const RealPoly& b) { return a.coeffs_ == b.coeffs_; }

  RealPoly pow(unsigned exponent) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  RealPoly quotient;
  RealPoly remainder;
};

/// Euclidean division; throws Error{InvalidArgument} on a zero divisor.
DivMod divmod(const RealPoly& a, const RealPoly& b);

/// Exact quotient; throws Error{InvalidArgument} when b does not divide a.
RealPoly exact_divide(const RealPoly& a, const RealPoly& b);

/// Monic gcd over the rationals; gcd(0, 0) = 0.
RealPoly gcd(const RealPoly& a, const RealPoly& b);

struct ExtendedGcd {
  RealPoly d;  ///< monic gcd
  RealPoly a;
  RealPoly b;
};

/// a*p + b*q = d exactly, with d the monic gcd. Requires p, q not both zero.
ExtendedGcd gcd_extended(const RealPoly& p, const RealPoly& q);

/// Generalisation to n polynomials: sum coefficients[i]*ps[i] = d.
struct ExtendedGcdMany {
  RealPoly d;
  std::vector<RealPoly> coefficients;
};
ExtendedGcdMany gcd_extended(const std::vector<RealPoly>& ps);

/// Squarefree decomposition (Yun): p = c * prod f_m^m with each f_m monic,
/// squarefree and pairwise coprime. Only nonconstant factors are returned.
std::vector<std::pair<RealPoly, int>> squarefree_factors(const RealPoly& p);

/// Signed remainder (Sturm) sequence of p.
std::vector<RealPoly> sturm_sequence(const RealPoly& p);

/// Number of sign variations of the sequence evaluated at x (zeros skipped).
int sign_variations(const std::vector<RealPoly>& seq, const Rational& x);

}  // namespace discstab
