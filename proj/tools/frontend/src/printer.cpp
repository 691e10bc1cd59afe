#include "discstab/frontend/printer.hpp"

#include <cmath>
#include <cstdio>

namespace discstab::frontend {

std::string print_poly(const RealPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string print_element(const DiscElement& a) {
  const std::string num = print_poly(a.num());
  if (a.den() == RealPoly{1}) return num;
  int terms = 0;
  for (const auto& c : a.num().coeffs()) terms += c != 0;
  return (terms > 1 ? "(" + num + ")" : num) + " / (" + print_poly(a.den()) + ")";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace discstab::frontend
