#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "discstab/cert.hpp"
#include "discstab/errors.hpp"
#include "discstab/roots.hpp"
#include "helpers.hpp"

using namespace discstab;
using testing_support::el;
using testing_support::poly;

TEST(CountZeros, Examples) {
  EXPECT_EQ(count_zeros_disc(el({-2, 1})), 0);
  EXPECT_EQ(count_zeros_disc(el({0, 0, 0, 1})), 3);
  // (z - 1/2)(z - 3)
  EXPECT_EQ(count_zeros_disc(el({Rational(3, 2), Rational(-7, 2), 1})), 1);
}

TEST(IsUnit, Examples) {
  const auto a = is_unit(el({-2, 1}));
  ASSERT_TRUE(certified(a));
  EXPECT_NEAR(std::get<UnitCertificate>(a).margin, 1.0, 1e-12);

  const auto b = is_unit(el({0, 0, 1}));
  ASSERT_FALSE(certified(b));

  // 20 (1+z)^2/4 + 2 = 7 + 10z + 5z^2, roots -1 +- i sqrt(2/5)
  const auto c = is_unit(el({7, 10, 5}));
  ASSERT_TRUE(certified(c));
  EXPECT_NEAR(std::get<UnitCertificate>(c).min_root_modulus, std::sqrt(1.4), 1e-12);
}

TEST(IsUnit, ZeroOnTheCircleIsNotAUnit) {
  EXPECT_FALSE(certified(is_unit(el({1, 0, 1}))));
  EXPECT_FALSE(certified(is_unit(el({1, -1}))));
}

TEST(IsUnit, ZeroElementIsRejected) {
  EXPECT_THROW(is_unit(DiscElement()), Error);
}

TEST(Corona, PairExamples) {
  EXPECT_TRUE(certified(is_invertible_pair(el({0, 1}), el({1, 0, -1}))));
  const auto v = is_invertible_pair(el({0, 0, 1}), el({0, 0, 0, 1}));
  ASSERT_FALSE(certified(v));
  const auto& n = std::get<NotInvertible>(v);
  ASSERT_TRUE(n.common_root.has_value());
  EXPECT_LT(std::abs(*n.common_root), 1e-12);
  // (z-2)z and (z-2)(1-z^2): common root 2 lies outside.
  EXPECT_TRUE(certified(is_invertible_pair(el({0, -2, 1}), el({-2, 1, 2, -1}))));
}

TEST(Corona, TupleExamples) {
  const std::vector<DiscElement> a{DiscElement::constant(1), DiscElement()};
  EXPECT_TRUE(certified(is_invertible_tuple(a)));
  const std::vector<DiscElement> b{el({0, 1}), el({0, 0, 1}), el({0, 0, 0, 1})};
  EXPECT_FALSE(certified(is_invertible_tuple(b)));
  const std::vector<DiscElement> c{DiscElement::constant(1), el({0, 0, 1}), el({0, 0, 9})};
  EXPECT_TRUE(certified(is_invertible_tuple(c)));
}

TEST(Corona, WitnessSatisfiesIdentity) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const std::vector<DiscElement> fs{testing_support::random_element(rng, 5, 6),
                                      testing_support::random_element(rng, 5, 6)};
    const auto x = corona_witness(fs);
    if (!x) continue;
    ++checked;
    const oracle::Frac s =
        oracle::add(oracle::mul(testing_support::to_oracle((*x)[0]), testing_support::to_oracle(fs[0])),
                    oracle::mul(testing_support::to_oracle((*x)[1]), testing_support::to_oracle(fs[1])));
    EXPECT_TRUE(oracle::same(s, {{oracle::Q(1)}, {oracle::Q(1)}}));
  }
  EXPECT_GT(checked, 30);
}

// The two counting methods inside the certifier, run separately on
// polynomials with known roots kept away from the circle.
TEST(CertProperty, MethodAgreementOnPlantedRoots) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const auto pr = oracle::planted(rng, 10, 1e-6);
    const RealPoly p(pr.p);
    int by_roots = 0;
    for (const auto& r : roots(p)) {
      if (std::abs(r.value) < 1.0) by_roots += r.multiplicity;
    }
    const int by_winding = winding_count(p.to_double());
    EXPECT_EQ(by_roots, pr.inside);
    EXPECT_EQ(by_winding, pr.inside);
    const auto v = certify_unit(p);
    EXPECT_EQ(certified(v), pr.inside == 0);
    EXPECT_EQ(certified(v), oracle::zero_free_closed_disc(pr.p));
  }
}

TEST(CertProperty, AgreesWithSchurCohnOnRandomPolynomials) {
  std::mt19937_64 rng(47);
  int units = 0;
  for (int i = 0; i < 400; ++i) {
    const auto o = oracle::random_poly(rng, 8, 9);
    UnitVerdict v;
    try {
      v = certify_unit(RealPoly(o));
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::Indeterminate);
      continue;
    }
    EXPECT_EQ(certified(v), oracle::zero_free_closed_disc(o));
    units += certified(v);
  }
  EXPECT_GT(units, 20);
}

TEST(CertProperty, ScalingKeepsTheRootSet) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const DiscElement a = testing_support::random_poly_element(rng, 6, 8);
    const auto v = is_unit(a);
    if (!certified(v)) continue;
    for (Rational c : {Rational(-3), Rational(1, 7), Rational(1000)}) {
      const auto w = is_unit(a * DiscElement::constant(c));
      ASSERT_TRUE(certified(w));
      EXPECT_EQ(std::get<UnitCertificate>(w).margin, std::get<UnitCertificate>(v).margin);
    }
  }
}

TEST(CertProperty, DeltaLowerIsSound) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> rad(0, 1), ang(0, 2 * M_PI);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    const DiscElement f = testing_support::random_element(rng, 4, 5);
    const DiscElement g = testing_support::random_element(rng, 4, 5);
    const auto v = is_invertible_pair(f, g);
    if (!certified(v)) continue;
    ++checked;
    const double delta = std::get<CoronaCertificate>(v).delta_lower;
    for (int k = 0; k < 1000; ++k) {
      const ComplexVal p = std::polar(std::sqrt(rad(rng)), ang(rng));
      EXPECT_GE(std::abs(eval(f, p)) + std::abs(eval(g, p)), delta);
    }
  }
  EXPECT_GT(checked, 10);
}
