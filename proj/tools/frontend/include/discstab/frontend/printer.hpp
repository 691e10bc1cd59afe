#pragma once

#include <string>

#include "discstab/disc_element.hpp"

namespace discstab::frontend {

/// Ascending terms with zero terms omitted: "1 - z^2", "-3/2 + z".
std::string print_poly(const RealPoly& p);

/// "num / (den)" in canonical form, or just the numerator when the
/// denominator is 1. A numerator with several terms is parenthesized so the
/// text parses back to the same element.
std::string print_element(const DiscElement& a);

/// printf("%.17g"); "inf", "-inf" and "nan" for non-finite values.
std::string format_double(double x);

}  // namespace discstab::frontend
