#include "discstab/stabilize.hpp"

#include <cmath>

#include "discstab/cert.hpp"
#include "discstab/errors.hpp"

namespace discstab {

namespace {

UnitCertificate require_unit(const DiscElement& a, const char* what) {
  if (a.is_zero()) throw Error(ErrorKind::IdentityViolated, std::string("internal: ") + what + " is zero");
  UnitVerdict v = is_unit(a);
  if (auto* c = std::get_if<UnitCertificate>(&v)) return *c;
  throw Error(ErrorKind::IdentityViolated, std::string("internal: ") + what + " is not a unit");
}

}  // namespace

StabilizationResult simultaneous_stabilize(const ElementPair& pair1, const ElementPair& pair2,
                                           const SearchOptions& opts) {
  StabilizationResult out;
  out.sign_report = is_sign_linked(pair1, pair2);
  if (!out.sign_report.linked()) throw Error(ErrorKind::NotSignLinked, "the pairs are not sign-linked");

  const BezoutSolution base = solve_bezout(pair1.f, pair1.g);
  const DiscElement big_f = base.alpha * pair2.f + base.beta * pair2.g;
  const DiscElement big_g = pair1.g * pair2.f - pair1.f * pair2.g;
  const ReductionWitness w = find_h(big_f, big_g, opts);

  out.h_used = w.h;
  out.strategy = w.strategy;
  out.alpha = base.alpha + w.h * pair1.g;
  out.beta = base.beta - w.h * pair1.f;
  if (!(out.alpha * pair1.f + out.beta * pair1.g == DiscElement::constant(1))) {
    throw Error(ErrorKind::IdentityViolated, "internal: first target is not 1");
  }
  out.unit_certs.push_back(constant_certificate(1.0));
  out.unit_certs.push_back(require_unit(out.alpha * pair2.f + out.beta * pair2.g, "second target"));
  return out;
}

StabilizationResult stabilize_squares(const ElementPair& pair1, const ElementPair& pair2, const SearchOptions& opts) {
  const ElementPair sq1{pair1.f * pair1.f, pair1.g};
  const ElementPair sq2{pair2.f * pair2.f, pair2.g};
  if (!certified(is_invertible_pair(sq1.f, sq1.g))) throw Error(ErrorKind::NotInvertible, "(f1^2, g1)");
  if (!certified(is_invertible_pair(sq2.f, sq2.g))) throw Error(ErrorKind::NotInvertible, "(f2^2, g2)");
  // lambda = (f2/f1)^2 > 0 except at common real zeros of f1 and f2, where it
  // is g2/g1; NotSignLinked from there is a genuine verdict.
  return simultaneous_stabilize(sq1, sq2, opts);
}

std::vector<Rational> default_x_candidates(int count) {
  std::vector<Rational> out;
  Rational x(1, 10);
  while (static_cast<int>(out.size()) < count) {
    out.push_back(x);
    if (static_cast<int>(out.size()) < count) out.push_back(-x);
    x /= 2;
  }
  return out;
}

TotalReduceResult total_reduce(const DiscElement& f, const DiscElement& g, const std::vector<Rational>& x_candidates,
                               const SearchOptions& opts) {
  if (!certified(is_invertible_pair(f, g))) throw Error(ErrorKind::NotInvertiblePair, "(f, g) is not invertible");
  if (!constant_sign_on_real_zeros(g, f).holds) {
    throw Error(ErrorKind::ReducibilityViolated, "g changes sign on the real zeros of f");
  }

  TotalReduceResult r;
  // g + k f = w with w a unit, so (k/w) f + (1/w) g = 1.
  const ReductionWitness base = find_h(g, f, opts);
  const DiscElement w = g + base.h * f;
  r.base_h = divide(base.h, w);
  r.base_v = divide(DiscElement::constant(1), w);

  // M just above the norm: any M > ||f|| keeps f - M a unit.
  const NormBounds fn = sup_norm_boundary(f);
  const Rational lo = from_double(fn.lo) + 1;
  const Rational hi = from_double(fn.hi) + 1;
  r.m = (fn.hi - fn.lo < 0.5) ? simplest_between(lo, hi) : simplest_between(hi, hi + 1);
  const DiscElement f_minus_m = f - DiscElement::constant(r.m);
  require_unit(f_minus_m, "f - M");
  r.f_minus_m_norm = sup_norm_boundary(f_minus_m).hi;
  r.base_h_norm = r.base_h.is_zero() ? 0.0 : sup_norm_boundary(r.base_h).hi;
  const double eps_cap = r.base_h.is_zero() ? std::numeric_limits<double>::infinity()
                                            : 1.0 / (r.f_minus_m_norm * r.base_h_norm);

  for (const Rational& x : x_candidates) {
    if (sgn(x) == 0 || x >= r.m) continue;
    const DiscElement f_minus_x = f - DiscElement::constant(x);
    if (f_minus_x.is_zero() || !certified(is_unit(f_minus_x))) continue;
    const Rational eps = x / (r.m - x);
    if (std::abs(to_double(eps)) > eps_cap) continue;

    const DiscElement e = DiscElement::constant(eps);
    const DiscElement inv_f_minus_m = divide(DiscElement::constant(1), f_minus_m);
    const DiscElement big_r = divide(DiscElement::constant(eps + 1) * f_minus_x, f_minus_m);
    const DiscElement u = divide(inv_f_minus_m + e * r.base_h, big_r);
    const DiscElement v = divide(e * r.base_v, big_r);
    if (!(u * f + v * g == DiscElement::constant(1))) {
      throw Error(ErrorKind::IdentityViolated, "internal: u f + v g != 1");
    }
    if (u.is_zero() || v.is_zero()) continue;
    UnitVerdict uv = is_unit(u);
    UnitVerdict vv = is_unit(v);
    if (!certified(uv) || !certified(vv)) continue;
    r.u = u;
    r.v = v;
    r.x = x;
    r.eps = eps;
    r.u_cert = std::get<UnitCertificate>(uv);
    r.v_cert = std::get<UnitCertificate>(vv);
    return r;
  }
  throw Error(ErrorKind::NoAdmissibleValue, "no candidate x leaves f - x a unit within the step constraint");
}

bool check_total_reduce_necessary(const DiscElement& f, const DiscElement& g) {
  if (!certified(is_invertible_pair(f, g))) throw Error(ErrorKind::NotInvertiblePair, "(f, g) is not invertible");
  return parity_interlacing(f, g);
}

}  // namespace discstab
