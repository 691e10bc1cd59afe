#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace discstab {

/// Exact rational number (GMP, always kept in lowest terms).
using Rational = mpq_class;

/// Reads an integer ("-12"), a decimal ("0.125", "-3.5e-2") or a fraction
/// ("-1/10") exactly. Throws Error{ParseError} on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double value);

/// Simplest fraction (smallest denominator, then numerator) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Best rational approximation with denominator at most max_den.
Rational approximate(double value, long max_den);

Rational abs(const Rational& value);

}  // namespace discstab
