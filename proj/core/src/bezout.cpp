#include "discstab/bezout.hpp"

#include "discstab/errors.hpp"

namespace discstab {

BezoutSolution solve_bezout(const DiscElement& f, const DiscElement& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::NotInvertiblePair, "both entries are zero");
  ExtendedGcd eg = gcd_extended(f.num(), g.num());
  UnitVerdict v = certify_unit(eg.d);
  if (auto* nu = std::get_if<NotUnit>(&v)) {
    throw Error(ErrorKind::NotInvertiblePair, "numerators share a zero in the closed disc (" + nu->reason + ")");
  }
  BezoutSolution sol;
  sol.alpha = DiscElement::fraction(eg.a * f.den(), eg.d);
  sol.beta = DiscElement::fraction(eg.b * g.den(), eg.d);
  sol.exact = (sol.alpha * f + sol.beta * g) == DiscElement::constant(1);
  if (!sol.exact) throw Error(ErrorKind::IdentityViolated, "internal: Bezout residual is nonzero");
  return sol;
}

BezoutSolution symmetrize(const ComplexPolyPair& solution, const DiscElement& f, const DiscElement& g) {
  // With f = nf/df and g = ng/dg: alpha f + beta g = 1 iff
  // alpha nf dg + beta ng df = df dg, split into real and imaginary parts.
  const RealPoly lhs_re = solution.alpha.re * f.num() * g.den() + solution.beta.re * g.num() * f.den();
  const RealPoly lhs_im = solution.alpha.im * f.num() * g.den() + solution.beta.im * g.num() * f.den();
  if (!(lhs_re == f.den() * g.den()) || !lhs_im.is_zero()) {
    throw Error(ErrorKind::IdentityViolated, "input is not an exact solution of alpha f + beta g = 1");
  }
  BezoutSolution out;
  out.alpha = DiscElement::from_poly(solution.alpha.re);
  out.beta = DiscElement::from_poly(solution.beta.re);
  out.exact = (out.alpha * f + out.beta * g) == DiscElement::constant(1);
  return out;
}

DiscElement inner(std::span<const DiscElement> x, std::span<const DiscElement> f) {
  if (x.size() != f.size()) throw Error(ErrorKind::DimensionMismatch, "inner product of tuples of different length");
  DiscElement acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc = acc + x[i] * f[i];
  return acc;
}

namespace {

void check_square(const Matrix& m, std::size_t n) {
  if (m.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix row count does not match the tuple");
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  }
}

Tuple mat_vec(const Matrix& m, const Tuple& v) {
  Tuple out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = inner(m[i], v);
  return out;
}

Matrix minor_of(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<DiscElement> r;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) r.push_back(m[i][j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

DiscElement determinant(const Matrix& m) {
  check_square(m, m.size());
  if (m.empty()) return DiscElement::constant(1);
  if (m.size() == 1) return m[0][0];
  if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  DiscElement acc;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j].is_zero()) continue;
    DiscElement term = m[0][j] * determinant(minor_of(m, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Tuple transform_solution(const Tuple& x, const Tuple& f, const Matrix& h) {
  if (x.size() != f.size()) throw Error(ErrorKind::DimensionMismatch, "x and f differ in length");
  check_square(h, f.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i; j < h.size(); ++j) {
      if (!(h[i][j] == -h[j][i])) throw Error(ErrorKind::NotAntisymmetric, "H is not antisymmetric");
    }
  }
  if (!(inner(x, f) == DiscElement::constant(1))) throw Error(ErrorKind::NotASolution, "<x, f> != 1");
  Tuple hf = mat_vec(h, f);
  Tuple y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + hf[i];
  return y;
}

BezoutSolution transform_solution(const BezoutSolution& x, const ElementPair& f, const DiscElement& h) {
  const Matrix hm = {{DiscElement(), h}, {-h, DiscElement()}};
  Tuple y = transform_solution(Tuple{x.alpha, x.beta}, Tuple{f.f, f.g}, hm);
  return {y[0], y[1], true};
}

DiscElement recover_h(const BezoutSolution& x, const BezoutSolution& y, const ElementPair& f) {
  if (f.f.is_zero() && f.g.is_zero()) throw Error(ErrorKind::InvalidArgument, "pair is zero");
  const DiscElement d1 = y.alpha - x.alpha;
  const DiscElement d2 = y.beta - x.beta;
  std::optional<DiscElement> via_g, via_f;
  if (!f.g.is_zero()) {
    via_g = try_divide(d1, f.g);
    if (!via_g) throw Error(ErrorKind::InconsistentSolutions, "(y1 - x1) / g is not in the algebra");
  } else if (!d1.is_zero()) {
    throw Error(ErrorKind::InconsistentSolutions, "g = 0 but the first coordinates differ");
  }
  if (!f.f.is_zero()) {
    via_f = try_divide(-d2, f.f);
    if (!via_f) throw Error(ErrorKind::InconsistentSolutions, "-(y2 - x2) / f is not in the algebra");
  } else if (!d2.is_zero()) {
    throw Error(ErrorKind::InconsistentSolutions, "f = 0 but the second coordinates differ");
  }
  if (via_g && via_f && !(*via_g == *via_f)) {
    throw Error(ErrorKind::InconsistentSolutions, "the two quotients disagree");
  }
  return via_g ? *via_g : *via_f;
}

MatrixApplication apply_matrix(const Matrix& m, const Tuple& f) {
  check_square(m, f.size());
  MatrixApplication out;
  out.g = mat_vec(m, f);
  out.determinant = determinant(m);
  out.determinant_unit = !out.determinant.is_zero() && certified(is_unit(out.determinant));
  auto a = corona_witness(f);
  out.f_invertible = a.has_value();
  if (!out.f_invertible || !out.determinant_unit) return out;

  // (M^-1)^T = adj(M)^T / det = cofactor matrix / det.
  const std::size_t n = f.size();
  Tuple w(n);
  for (std::size_t i = 0; i < n; ++i) {
    DiscElement acc;
    for (std::size_t j = 0; j < n; ++j) {
      DiscElement cof = n == 1 ? DiscElement::constant(1) : determinant(minor_of(m, i, j));
      if ((i + j) % 2 == 1) cof = -cof;
      acc = acc + cof * (*a)[j];
    }
    w[i] = divide(acc, out.determinant);
  }
  if (!(inner(out.g, w) == DiscElement::constant(1))) {
    throw Error(ErrorKind::IdentityViolated, "internal: transported witness fails <g, w> = 1");
  }
  out.g_invertible = true;
  out.witness = std::move(w);
  return out;
}

}  // namespace discstab
