#include "discstab/real_poly.hpp"

#include <cmath>
#include <cstdlib>

#include "discstab/errors.hpp"

namespace discstab {

RealPoly::RealPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RealPoly::RealPoly(std::initializer_list<Rational> coeffs) : RealPoly(std::vector<Rational>(coeffs)) {}

RealPoly RealPoly::constant(const Rational& c) { return RealPoly(std::vector<Rational>{c}); }

RealPoly RealPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return RealPoly(std::move(coeffs));
}

void RealPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RealPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RealPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

ComplexVal RealPoly::operator()(ComplexVal z) const {
  auto v = eval_long(std::complex<long double>(z.real(), z.imag()));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<long double> RealPoly::eval_long(std::complex<long double> z) const {
  std::complex<long double> acc(0.0L, 0.0L);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + static_cast<long double>(it->get_d());
  }
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RealPoly(std::move(out));
}

RealPoly RealPoly::reciprocal() const {
  return RealPoly(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

RealPoly RealPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

RealPoly RealPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : coeffs_) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  return *this * factor;
}

RealPoly RealPoly::reflect() const {
  std::vector<Rational> out = coeffs_;
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return RealPoly(std::move(out));
}

std::vector<double> RealPoly::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_d());
  return out;
}

double RealPoly::abs_coeff_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c.get_d());
  return s;
}

double RealPoly::abs_derivative_sum() const {
  double s = 0.0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) s += static_cast<double>(k) * std::abs(coeffs_[k].get_d());
  return s;
}

RealPoly RealPoly::operator-() const {
  RealPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RealPoly& RealPoly::operator+=(const RealPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RealPoly& RealPoly::operator-=(const RealPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RealPoly& RealPoly::operator*=(const RealPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RealPoly& RealPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RealPoly RealPoly::pow(unsigned exponent) const {
  RealPoly result = constant(Rational(1));
  RealPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

DivMod divmod(const RealPoly& a, const RealPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RealPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const Rational inv_lead = 1 / b.leading();
  const std::size_t db = bc.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  rem.resize(db);
  return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

RealPoly exact_divide(const RealPoly& a, const RealPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division is not exact");
  return q;
}

RealPoly gcd(const RealPoly& a, const RealPoly& b) {
  RealPoly x = a;
  RealPoly y = b;
  while (!y.is_zero()) {
    RealPoly r = divmod(x, y).remainder;
    x = std::move(y);
    // Keep the remainders monic to slow coefficient growth.
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd gcd_extended(const RealPoly& p, const RealPoly& q) {
  if (p.is_zero() && q.is_zero()) {
    throw Error(ErrorKind::InvalidArgument, "gcd_extended of two zero polynomials");
  }
  // Invariant: r0 = s0*p + t0*q, r1 = s1*p + t1*q.
  RealPoly r0 = p, r1 = q;
  RealPoly s0 = RealPoly::constant(1), s1;
  RealPoly t0, t1 = RealPoly::constant(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    RealPoly s2 = s0 - quot * s1;
    RealPoly t2 = t0 - quot * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

ExtendedGcdMany gcd_extended(const std::vector<RealPoly>& ps) {
  ExtendedGcdMany out;
  out.coefficients.assign(ps.size(), RealPoly{});
  std::size_t first = ps.size();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!ps[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first == ps.size()) throw Error(ErrorKind::InvalidArgument, "gcd_extended of zero polynomials");
  Rational inv = 1 / ps[first].leading();
  out.d = ps[first] * inv;
  out.coefficients[first] = RealPoly::constant(inv);
  for (std::size_t i = first + 1; i < ps.size(); ++i) {
    if (ps[i].is_zero()) continue;
    ExtendedGcd step = gcd_extended(out.d, ps[i]);
    for (std::size_t j = 0; j < i; ++j) out.coefficients[j] *= step.a;
    out.coefficients[i] = step.b;
    out.d = step.d;
  }
  return out;
}

std::vector<std::pair<RealPoly, int>> squarefree_factors(const RealPoly& p) {
  std::vector<std::pair<RealPoly, int>> out;
  if (p.degree() < 1) return out;
  RealPoly f = p.monic();
  RealPoly df = f.derivative();
  RealPoly a = gcd(f, df);
  RealPoly b = exact_divide(f, a);
  // Yun: c = f'/a, d = c - b'
  RealPoly c = exact_divide(df, a);
  RealPoly d = c - b.derivative();
  int m = 1;
  while (b.degree() >= 1) {
    RealPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, m);
    RealPoly nb = exact_divide(b, g);
    c = exact_divide(d, g);
    b = std::move(nb);
    d = c - b.derivative();
    ++m;
  }
  return out;
}

std::vector<RealPoly> sturm_sequence(const RealPoly& p) {
  std::vector<RealPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RealPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    RealPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    // Scale by a positive factor only; the sign of -r must be preserved.
    RealPoly next = -r;
    Rational lead_abs = abs(next.leading());
    seq.push_back(next * (1 / lead_abs));
  }
  return seq;
}

int sign_variations(const std::vector<RealPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace discstab
