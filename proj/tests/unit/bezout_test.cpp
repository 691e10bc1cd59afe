#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "discstab/bezout.hpp"
#include "discstab/errors.hpp"
#include "helpers.hpp"

using namespace discstab;
using testing_support::el;
using testing_support::poly;
using testing_support::to_oracle;

namespace {

const DiscElement one = DiscElement::constant(1);
const DiscElement zero;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

bool identity_holds(const BezoutSolution& s, const DiscElement& f, const DiscElement& g) {
  const auto lhs = oracle::add(oracle::mul(to_oracle(s.alpha), to_oracle(f)), oracle::mul(to_oracle(s.beta), to_oracle(g)));
  return oracle::same(lhs, {{oracle::Q(1)}, {oracle::Q(1)}});
}

}  // namespace

TEST(SolveBezout, Examples) {
  const auto a = solve_bezout(one, zero);
  EXPECT_EQ(a.alpha, one);
  EXPECT_EQ(a.beta, zero);

  const auto b = solve_bezout(el({0, 1}), el({1, 0, -1}));
  EXPECT_EQ(b.alpha, el({0, 1}));
  EXPECT_EQ(b.beta, one);

  // ((z-2)z, (z-2)(1-z^2)) -> z/(z-2), 1/(z-2)
  const auto c = solve_bezout(el({0, -2, 1}), el({-2, 1, 2, -1}));
  EXPECT_EQ(c.alpha, el({0, 1}, {-2, 1}));
  EXPECT_EQ(c.beta, el({1}, {-2, 1}));
}

TEST(SolveBezout, SharedDiscZeroIsRejected) {
  EXPECT_EQ(kind_of([] { solve_bezout(el({0, 1}), el({0, 0, 0, 1})); }), ErrorKind::NotInvertiblePair);
}

TEST(SolveBezout, RandomPairsAreExact) {
  std::mt19937_64 rng(61);
  int solved = 0;
  for (int i = 0; i < 200; ++i) {
    const DiscElement f = testing_support::random_element(rng, 8, 10);
    const DiscElement g = testing_support::random_element(rng, 8, 10);
    if (!certified(is_invertible_pair(f, g))) continue;
    const auto s = solve_bezout(f, g);
    EXPECT_TRUE(s.exact);
    EXPECT_TRUE((s.alpha * f + s.beta * g - one).is_zero());
    EXPECT_TRUE(identity_holds(s, f, g));
    ++solved;
  }
  EXPECT_GT(solved, 150);
}

TEST(Symmetrize, Examples) {
  const DiscElement f = el({0, 1}), g = el({1, 0, -1});
  const auto a = symmetrize({{poly({0, 1}), {}}, {poly({1}), {}}}, f, g);
  EXPECT_EQ(a.alpha, f);
  EXPECT_EQ(a.beta, one);

  // alpha = z + i(1 - z^2), beta = 1 - iz
  const auto b = symmetrize({{poly({0, 1}), poly({1, 0, -1})}, {poly({1}), poly({0, -1})}}, f, g);
  EXPECT_EQ(b.alpha, f);
  EXPECT_EQ(b.beta, one);
  EXPECT_TRUE(identity_holds(b, f, g));

  EXPECT_EQ(kind_of([&] { symmetrize({{{}, poly({1})}, {poly({5}), {}}}, one, zero); }), ErrorKind::IdentityViolated);
}

TEST(TransformSolution, PairExamples) {
  const ElementPair f{el({0, 1}), el({1, 0, -1})};
  const BezoutSolution x{el({0, 1}), one};
  const auto y = transform_solution(x, f, one);
  EXPECT_EQ(y.alpha, el({1, 1, -1}));
  EXPECT_EQ(y.beta, el({1, -1}));
  EXPECT_EQ(y.alpha * f.f + y.beta * f.g, one);

  const auto same = transform_solution(x, f, zero);
  EXPECT_EQ(same.alpha, x.alpha);
  EXPECT_EQ(same.beta, x.beta);
}

TEST(TransformSolution, TupleExample) {
  const DiscElement z = DiscElement::z();
  const Tuple x{one, zero, zero};
  const Tuple f{one, z, z * z};
  const Matrix h{{zero, z, zero}, {-z, zero, zero}, {zero, zero, zero}};
  const Tuple y = transform_solution(x, f, h);
  ASSERT_EQ(y.size(), 3u);
  EXPECT_EQ(y[0], one + z * z);
  EXPECT_EQ(y[1], -z);
  EXPECT_EQ(y[2], zero);
  EXPECT_EQ(inner(y, f), one);
}

TEST(TransformSolution, Preconditions) {
  const DiscElement z = DiscElement::z();
  const Tuple f{one, z};
  EXPECT_EQ(kind_of([&] { transform_solution(Tuple{zero, zero}, f, Matrix{{zero, zero}, {zero, zero}}); }),
            ErrorKind::NotASolution);
  EXPECT_EQ(kind_of([&] { transform_solution(Tuple{one, zero}, f, Matrix{{zero, z}, {z, zero}}); }),
            ErrorKind::NotAntisymmetric);
  EXPECT_EQ(kind_of([&] { transform_solution(Tuple{one, zero}, f, Matrix{{zero}}); }), ErrorKind::DimensionMismatch);
}

TEST(RecoverH, Examples) {
  const ElementPair f{el({0, 1}), el({1, 0, -1})};
  const BezoutSolution x{el({0, 1}), one};
  EXPECT_TRUE(recover_h(x, x, f).is_zero());
  EXPECT_EQ(recover_h(x, {el({1, 1, -1}), el({1, -1})}, f), one);
  EXPECT_EQ(kind_of([&] { recover_h(x, {el({0, 1}), zero}, f); }), ErrorKind::InconsistentSolutions);
}

TEST(BezoutProperty, TransformRecoverRoundTrip) {
  std::mt19937_64 rng(67);
  int done = 0;
  while (done < 100) {
    const ElementPair f{testing_support::random_element(rng, 4, 6), testing_support::random_element(rng, 4, 6)};
    if (f.f.is_zero() || f.g.is_zero() || !certified(is_invertible_pair(f.f, f.g))) continue;
    const DiscElement h = testing_support::random_element(rng, 4, 6);
    const auto x = solve_bezout(f.f, f.g);
    const auto y = transform_solution(x, f, h);
    EXPECT_TRUE(identity_holds(y, f.f, f.g));
    EXPECT_EQ(recover_h(x, y, f), h);
    ++done;
  }
}

TEST(ApplyMatrix, Examples) {
  const Tuple f{el({0, 1}), el({1, 0, -1})};
  const Matrix id{{one, zero}, {zero, one}};
  const auto a = apply_matrix(id, f);
  EXPECT_EQ(a.g, f);
  EXPECT_TRUE(a.g_invertible);

  const Matrix shear{{one, one}, {zero, one}};
  const auto b = apply_matrix(shear, f);
  EXPECT_EQ(b.g[0], el({1, 1, -1}));
  EXPECT_EQ(b.g[1], el({1, 0, -1}));
  EXPECT_TRUE(b.g_invertible);
  EXPECT_EQ(inner(b.witness, b.g), one);
  EXPECT_NO_THROW(solve_bezout(b.g[0], b.g[1]));
}

TEST(ApplyMatrix, PipelineMatrixHasDeterminantMinusOne) {
  const DiscElement z = DiscElement::z();
  const ElementPair p1{DiscElement::constant(1), z * z};
  const ElementPair p2{DiscElement::constant(4) * z * z, one};
  const auto s = solve_bezout(p1.f, p1.g);
  const Matrix m{{s.alpha, s.beta}, {p1.g, -p1.f}};
  EXPECT_EQ(determinant(m), DiscElement::constant(-1));
  const auto r = apply_matrix(m, Tuple{p2.f, p2.g});
  EXPECT_TRUE(r.determinant_unit);
  EXPECT_TRUE(r.g_invertible);
  EXPECT_TRUE(certified(is_invertible_tuple(r.g)));
}

TEST(BezoutProperty, UnitDeterminantPreservesInvertibility) {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 100) {
    const Tuple f{testing_support::random_element(rng, 3, 5), testing_support::random_element(rng, 3, 5)};
    if (!certified(is_invertible_tuple(f))) continue;
    // Unit-determinant matrix: product of a shear and a diagonal of units.
    const DiscElement a = testing_support::random_element(rng, 3, 5);
    const DiscElement u = testing_support::random_poly_element(rng, 2, 5);
    if (u.is_zero() || !certified(is_unit(u))) continue;
    const Matrix m{{u, u * a}, {zero, one}};
    const auto r = apply_matrix(m, f);
    ASSERT_TRUE(r.determinant_unit);
    EXPECT_TRUE(r.g_invertible);
    EXPECT_TRUE(certified(is_invertible_tuple(r.g)));
    EXPECT_EQ(inner(r.witness, r.g), one);
    ++done;
  }
}
