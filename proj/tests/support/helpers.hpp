#pragma once

#include <initializer_list>
#include <random>

#include "discstab/disc_element.hpp"
#include "oracle.hpp"

namespace testing_support {

inline discstab::RealPoly poly(std::initializer_list<discstab::Rational> c) { return discstab::RealPoly(c); }

inline discstab::DiscElement el(std::initializer_list<discstab::Rational> c) {
  return discstab::DiscElement::from_poly(discstab::RealPoly(c));
}

inline discstab::DiscElement el(std::initializer_list<discstab::Rational> num,
                                std::initializer_list<discstab::Rational> den) {
  return discstab::DiscElement::fraction(discstab::RealPoly(num), discstab::RealPoly(den));
}

inline oracle::Poly to_oracle(const discstab::RealPoly& p) { return oracle::trim(p.coeffs()); }

inline oracle::Frac to_oracle(const discstab::DiscElement& a) { return {to_oracle(a.num()), to_oracle(a.den())}; }

inline discstab::RealPoly from_oracle(const oracle::Poly& p) { return discstab::RealPoly(p); }

/// Random element whose denominator passes the exact Schur-Cohn test.
inline discstab::DiscElement random_element(std::mt19937_64& rng, int max_degree, int range) {
  const auto num = oracle::random_poly(rng, max_degree, range);
  for (;;) {
    auto den = oracle::random_poly(rng, max_degree / 2, range);
    if (oracle::zero_free_closed_disc(den)) {
      return discstab::DiscElement::fraction(from_oracle(num), from_oracle(den));
    }
  }
}

inline discstab::DiscElement random_poly_element(std::mt19937_64& rng, int max_degree, int range) {
  return discstab::DiscElement::from_poly(from_oracle(oracle::random_poly(rng, max_degree, range)));
}

}  // namespace testing_support
