#include "discstab/rational.hpp"

#include <cctype>
#include <cmath>

#include "discstab/errors.hpp"

namespace discstab {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

Rational parse_unsigned_decimal(std::string_view text, std::string_view whole) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(whole);
    exponent = std::stol(std::string(exp_text));
    if (negative) exponent = -exponent;
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(whole);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(whole);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(whole);
    digits = std::string(int_part) + std::string(frac_part);
    frac_len = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) bad_number(whole);
    digits = std::string(mantissa);
  }
  Rational value(mpz_class(digits, 10));
  value *= pow10(exponent - frac_len);
  value.canonicalize();
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    value = parse_unsigned_decimal(s, text);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "cannot convert a non-finite double to a rational");
  }
  Rational r(value);
  r.canonicalize();
  return r;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = lo_in;
  Rational hi = hi_in;
  if (hi < lo) std::swap(lo, hi);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return Rational(-simplest_between(-hi, -lo));

  // Continued-fraction walk down the Stern-Brocot tree (0 < lo <= hi).
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational x = lo;
  Rational y = hi;
  for (;;) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational a_r(a);
    if (a_r == x) {
      // x is an integer boundary: it is the simplest candidate.
      return Rational(mpz_class(a * p1 + p0), mpz_class(a * q1 + q0));
    }
    if (a_r + 1 <= y) {
      mpz_class b = a + 1;
      Rational out(mpz_class(b * p1 + p0), mpz_class(b * q1 + q0));
      out.canonicalize();
      return out;
    }
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational nx = 1 / (y - a_r);
    Rational ny = 1 / (x - a_r);
    x = nx;
    y = ny;
  }
}

Rational approximate(double value, long max_den) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "cannot approximate a non-finite double");
  }
  // Continued fraction convergents of the exact dyadic value.
  Rational x = from_double(value);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = x;
  Rational best(0);
  for (int guard = 0; guard < 200; ++guard) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) break;
    best = Rational(p2, q2);
    best.canonicalize();
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return best;
}

}  // namespace discstab
