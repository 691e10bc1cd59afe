#include "discstab/sign_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "discstab/cert.hpp"
#include "discstab/errors.hpp"

namespace discstab {

namespace {

constexpr int kRefinementCap = 200;

const Rational& isolation_width() {
  static const Rational w("1/1000000000000");
  return w;
}

int sgn_of(const Rational& q) { return sgn(q); }

struct RInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  int sign() const { return sgn(lo) > 0 ? 1 : (sgn(hi) < 0 ? -1 : 0); }
};

RInterval operator+(const RInterval& a, const Rational& c) { return {a.lo + c, a.hi + c}; }

RInterval operator*(const RInterval& a, const RInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RInterval reciprocal(const RInterval& a) { return {1 / a.hi, 1 / a.lo}; }

// Horner enclosure of p over [x.lo, x.hi].
RInterval enclose(const RealPoly& p, const RInterval& x) {
  if (p.is_zero()) return {0, 0};
  RInterval acc{p.leading(), p.leading()};
  for (int k = p.degree() - 1; k >= 0; --k) acc = acc * x + p.coeff(k);
  return acc;
}

// Enclosure of a = num/den; nullopt when the denominator enclosure still
// touches zero.
std::optional<RInterval> enclose(const DiscElement& a, const RInterval& x) {
  RInterval d = enclose(a.den(), x);
  if (d.contains_zero()) return std::nullopt;
  return enclose(a.num(), x) * reciprocal(d);
}

void isolate(const RealPoly& f, const std::vector<RealPoly>& seq, Rational a, Rational b, int count, int mult,
             std::vector<IsolatingInterval>& out) {
  // Invariant: exactly `count` roots of f in (a, b].
  if (count == 0) return;
  if (count == 1) {
    IsolatingInterval iv{a, b, mult, f};
    if (sgn(f(b)) == 0) {
      iv.lo = b;
    } else {
      while (iv.hi - iv.lo >= isolation_width() && !iv.exact()) bisect(iv);
    }
    out.push_back(std::move(iv));
    return;
  }
  Rational m = (a + b) / 2;
  int left = sign_variations(seq, a) - sign_variations(seq, m);
  isolate(f, seq, a, m, left, mult, out);
  isolate(f, seq, m, b, count - left, mult, out);
}

}  // namespace

double IsolatingInterval::midpoint() const { return to_double((lo + hi) / 2); }

void bisect(IsolatingInterval& x) {
  if (x.exact()) return;
  Rational m = (x.lo + x.hi) / 2;
  int sm = sgn_of(x.factor(m));
  int shi = sgn_of(x.factor(x.hi));
  if (sm == 0 || shi == 0) {
    x.lo = x.hi = (sm == 0 ? m : x.hi);
    return;
  }
  // The root is simple and the only one in (lo, hi], so it lies in (m, hi)
  // exactly when the sign changes there.
  if (sm * shi < 0) {
    x.lo = m;
  } else {
    x.hi = m;
  }
}

std::vector<IsolatingInterval> real_roots_interval(const RealPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "real_roots_interval of the zero polynomial");
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty interval");
  std::vector<IsolatingInterval> out;
  for (const auto& [f, mult] : squarefree_factors(p)) {
    if (sgn(f(lo)) == 0) out.push_back({lo, lo, mult, f});
    if (lo == hi) continue;
    auto seq = sturm_sequence(f);
    int count = sign_variations(seq, lo) - sign_variations(seq, hi);
    isolate(f, seq, lo, hi, count, mult, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

DiscElement determinant(const ElementPair& pair1, const ElementPair& pair2) {
  return pair1.f * pair2.g - pair2.f * pair1.g;
}

SingularPoint lambda_at(const ElementPair& pair1, const ElementPair& pair2, const IsolatingInterval& x) {
  SingularPoint pt;
  pt.x = x;
  const double mid = x.midpoint();
  const double af = std::abs(eval(pair1.f, ComplexVal(mid, 0.0)));
  const double ag = std::abs(eval(pair1.g, ComplexVal(mid, 0.0)));
  pt.source = af >= ag ? PivotSource::F1Pivot : PivotSource::G1Pivot;
  const DiscElement& denom = pt.source == PivotSource::F1Pivot ? pair1.f : pair1.g;
  const DiscElement& numer = pt.source == PivotSource::F1Pivot ? pair2.f : pair2.g;

  for (int step = 0; step <= kRefinementCap; ++step) {
    const RInterval xi{pt.x.lo, pt.x.hi};
    auto d = enclose(denom, xi);
    auto n = enclose(numer, xi);
    if (d && n && !d->contains_zero()) {
      RInterval lam = *n * reciprocal(*d);
      const double lo = to_double(lam.lo);
      const double hi = to_double(lam.hi);
      const double width = hi - lo;
      const bool sign_known = lam.sign() != 0;
      if (sign_known && (width <= 1e-13 * std::max(1.0, std::abs(lo)) || pt.x.exact() || step == kRefinementCap)) {
        pt.lambda = 0.5 * (lo + hi);
        // Rounding of the endpoint conversions adds a few ulps.
        pt.lambda_error = 0.5 * width + 4 * std::numeric_limits<double>::epsilon() * std::abs(pt.lambda);
        return pt;
      }
    }
    if (pt.x.exact()) break;
    bisect(pt.x);
  }
  throw Error(ErrorKind::DegeneratePivot, "pivot value does not separate from zero at x ~ " + std::to_string(mid));
}

SignReport is_sign_linked(const ElementPair& pair1, const ElementPair& pair2) {
  if (!certified(is_invertible_pair(pair1.f, pair1.g))) throw Error(ErrorKind::NotInvertiblePair, "first pair");
  if (!certified(is_invertible_pair(pair2.f, pair2.g))) throw Error(ErrorKind::NotInvertiblePair, "second pair");

  SignReport report;
  report.determinant = determinant(pair1, pair2);
  if (report.determinant.is_zero()) {
    // (f2, g2) = mu (f1, g1) on the whole disc. Invertibility of both pairs
    // makes mu zero- and pole-free on the closed disc, hence of one sign on
    // [-1, 1]; report its value at 0.
    report.proportional = true;
    IsolatingInterval zero{0, 0, 1, RealPoly::z()};
    report.points.push_back(lambda_at(pair1, pair2, zero));
    report.verdict = SignLinkVerdict::SignLinked;
    return report;
  }
  for (auto& iv : real_roots_interval(report.determinant.num(), -1, 1)) {
    report.points.push_back(lambda_at(pair1, pair2, iv));
  }
  if (report.points.empty()) {
    report.verdict = SignLinkVerdict::NoSingularPoints;
    return report;
  }
  const bool pos = std::all_of(report.points.begin(), report.points.end(), [](auto& p) { return p.lambda > 0; });
  const bool neg = std::all_of(report.points.begin(), report.points.end(), [](auto& p) { return p.lambda < 0; });
  report.verdict = (pos || neg) ? SignLinkVerdict::SignLinked : SignLinkVerdict::NotSignLinked;
  return report;
}

ConstantSignVerdict constant_sign_on_real_zeros(const DiscElement& f, const DiscElement& g) {
  ConstantSignVerdict v;
  // g = 0 forces f to be a unit, which has one sign on [-1, 1].
  if (g.is_zero()) return v;
  for (auto& iv : real_roots_interval(g.num(), -1, 1)) {
    ZeroSign zs{iv, 0};
    for (int step = 0; step <= kRefinementCap; ++step) {
      auto e = enclose(f, RInterval{zs.x.lo, zs.x.hi});
      if (e && e->sign() != 0) {
        zs.sign = e->sign();
        break;
      }
      if (zs.x.exact()) break;
      bisect(zs.x);
    }
    if (zs.sign == 0) throw Error(ErrorKind::NotInvertiblePair, "f and g share a real zero");
    v.zeros.push_back(std::move(zs));
  }
  for (const auto& z : v.zeros) {
    if (z.sign != v.zeros.front().sign) v.holds = false;
  }
  return v;
}

bool parity_interlacing(const DiscElement& f, const DiscElement& g) {
  return constant_sign_on_real_zeros(f, g).holds && constant_sign_on_real_zeros(g, f).holds;
}

const char* to_string(SignLinkVerdict v) {
  switch (v) {
    case SignLinkVerdict::SignLinked: return "SignLinked";
    case SignLinkVerdict::NotSignLinked: return "NotSignLinked";
    case SignLinkVerdict::NoSingularPoints: return "NoSingularPoints";
  }
  return "?";
}

const char* to_string(PivotSource s) { return s == PivotSource::F1Pivot ? "F1Pivot" : "G1Pivot"; }

}  // namespace discstab
