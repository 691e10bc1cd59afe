#include "discstab/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "discstab/errors.hpp"
#include "discstab/roots.hpp"
#include "discstab/search.hpp"

namespace discstab {

namespace {

UnitVerdict unit_or_zero(const DiscElement& a) {
  if (a.is_zero()) return NotUnit{"zero element", ComplexVal(0.0, 0.0), 0};
  return is_unit(a);
}

double root_margin(const RealPoly& p) {
  if (p.is_zero()) return -1.0;
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : roots(p)) m = std::min(m, std::abs(r.value));
  return m - 1.0;
}

}  // namespace

TripleInstance make_triple(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  TripleInstance t;
  t.n = n;
  const DiscElement one = DiscElement::constant(1);
  const DiscElement z2 = DiscElement::z().pow(2);
  t.pairs = {ElementPair{one, DiscElement()}, ElementPair{one, z2},
             ElementPair{DiscElement::constant(Rational(n) * n) * z2, one}};
  for (int i = 0; i < 3; ++i) {
    CoronaVerdict v = is_invertible_pair(t.pairs[i].f, t.pairs[i].g);
    if (!certified(v)) throw Error(ErrorKind::IdentityViolated, "internal: triple pair is not invertible");
    t.corona[i] = std::get<CoronaCertificate>(v);
  }
  t.sign_reports = {is_sign_linked(t.pairs[0], t.pairs[1]), is_sign_linked(t.pairs[0], t.pairs[2]),
                    is_sign_linked(t.pairs[1], t.pairs[2])};
  return t;
}

std::array<UnitVerdict, 3> verify_candidate(const TripleInstance& t, const DiscElement& alpha,
                                            const DiscElement& beta) {
  const DiscElement z2 = DiscElement::z().pow(2);
  const DiscElement n2 = DiscElement::constant(Rational(t.n) * t.n);
  return {unit_or_zero(alpha), unit_or_zero(alpha + beta * z2), unit_or_zero(n2 * alpha * z2 + beta)};
}

const char* to_string(FalsificationVerdict v) {
  return v == FalsificationVerdict::WitnessFound ? "WitnessFound" : "NoWitnessFound";
}

FalsificationReport falsify(const TripleInstance& t, const SearchOptions& opts) {
  if (opts.max_degree < 0 || opts.budget <= 0) throw Error(ErrorKind::InvalidArgument, "bad search options");
  FalsificationReport report;
  report.n = t.n;
  const double n2 = static_cast<double>(t.n) * t.n;
  const int dim = opts.max_degree + 1;
  const double target = std::max(4 * opts.margin_target, 1e-4);

  std::vector<double> c1, c2;
  std::vector<ComplexVal> warm1, warm2;
  // Tracked apart from the search score, which ranks interior counts first.
  double best_modulus = -1.0;
  std::vector<double> best_point(dim, 0.0);
  auto fill = [&](const std::vector<double>& h) {
    // 1 + h z^2 and n^2 z^2 + h
    c1.assign(h.size() + 2, 0.0);
    c1[0] = 1.0;
    for (std::size_t k = 0; k < h.size(); ++k) c1[k + 2] += h[k];
    c2.assign(std::max<std::size_t>(h.size(), 3), 0.0);
    for (std::size_t k = 0; k < h.size(); ++k) c2[k] += h[k];
    c2[2] += n2;
  };
  Objective objective = [&](const std::vector<double>& h) {
    fill(h);
    QuickRootScan s1 = quick_root_scan(c1, target, warm1);
    QuickRootScan s2 = quick_root_scan(c2, target, warm2);
    Score s;
    s.interior = s1.interior + s2.interior;
    s.penalty = s1.penalty + s2.penalty + (s1.converged && s2.converged ? 0.0 : 1.0);
    s.tie = -std::min(s1.min_modulus, s2.min_modulus);
    if (s1.converged && s2.converged && -s.tie > best_modulus) {
      best_modulus = -s.tie;
      best_point = h;
    }
    return s;
  };

  const RealPoly z2 = RealPoly::monomial(1, 2);
  const RealPoly n2z2 = RealPoly::monomial(Rational(t.n) * t.n, 2);
  Acceptor accept = [&](const std::vector<double>& h, const Score&) {
    ++report.certification_attempts;
    auto q1 = snap_and_certify(h, opts.margin_target, [&](const std::vector<Rational>& q) {
      return RealPoly::constant(1) + RealPoly(q) * z2;
    });
    if (!q1) return false;
    const DiscElement beta = DiscElement::from_poly(RealPoly(*q1));
    auto verdicts = verify_candidate(t, DiscElement::constant(1), beta);
    if (!std::all_of(verdicts.begin(), verdicts.end(), [](const UnitVerdict& v) { return certified(v); })) {
      return false;
    }
    report.best_h = *q1;
    report.witness_certs = std::array<UnitCertificate, 3>{std::get<UnitCertificate>(verdicts[0]),
                                                          std::get<UnitCertificate>(verdicts[1]),
                                                          std::get<UnitCertificate>(verdicts[2])};
    return true;
  };

  SearchConfig config;
  config.dimension = dim;
  config.budget = opts.budget;
  config.seed = opts.seed;
  config.scale = static_cast<double>(t.n);
  // Constant h = c balances the two root moduli 1/sqrt(c) and sqrt(c)/n at
  // c = n.
  for (double c : {static_cast<double>(t.n), 1.0, 0.0, -1.0, n2, -static_cast<double>(t.n)}) {
    std::vector<double> s(dim, 0.0);
    s[0] = c;
    config.starts.push_back(std::move(s));
  }
  SearchOutcome outcome = minimize(config, objective, accept);
  report.budget_used = outcome.evaluations;
  if (report.witness_certs) {
    report.verdict = FalsificationVerdict::WitnessFound;
  } else {
    report.best_h.clear();
    for (double v : best_point) report.best_h.push_back(from_double(v));
  }
  const RealPoly hp(report.best_h);
  report.best_margin = std::min(root_margin(RealPoly::constant(1) + hp * z2), root_margin(hp + n2z2));
  return report;
}

std::vector<InterpolationConstraint> interpolation_constraints(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const double r = 1.0 / std::sqrt(static_cast<double>(n));
  const double v = static_cast<double>(n);
  return {{ComplexVal(r, 0), ComplexVal(v, 0)},
          {ComplexVal(-r, 0), ComplexVal(v, 0)},
          {ComplexVal(0, r), ComplexVal(-v, 0)},
          {ComplexVal(0, -r), ComplexVal(-v, 0)}};
}

ComplexVal phi_diagnostic(int n, const DiscElement& h, ComplexVal p) {
  const ComplexVal hp = eval(h, p);
  const ComplexVal p2 = p * p;
  const ComplexVal den = 1.0 + hp * p2;
  if (std::abs(den) < 1e-14) throw Error(ErrorKind::EvalNearPole, "1 + h(p) p^2 vanishes at p");
  const double n2 = static_cast<double>(n) * n;
  return p2 * (n2 * p2 + hp) / den;
}

}  // namespace discstab
