#include "discstab/reduce.hpp"

#include <algorithm>
#include <cmath>

#include "discstab/cert.hpp"
#include "discstab/errors.hpp"
#include "discstab/roots.hpp"
#include "discstab/search.hpp"
#include "discstab/sign_analysis.hpp"
#include "unit_interpolation.hpp"

namespace discstab {

namespace {

enum class Side { Inside, Outside };

Side classify(const Root& r, bool has_circle_pairs) {
  const double m = std::abs(r.value);
  const double slack = kCircleTolerance + r.radius;
  if (m + slack <= 1.0) return Side::Inside;
  if (m - slack > 1.0) return Side::Outside;
  // Near the circle: only roots that are exactly on it can be placed.
  if (has_circle_pairs) return Side::Inside;
  throw Error(ErrorKind::Indeterminate, "zero of G too close to the unit circle to place");
}

double sup_abs(const RealPoly& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(to_double(c)));
  return m;
}

}  // namespace

const char* to_string(ReductionStrategy s) {
  switch (s) {
    case ReductionStrategy::Zero: return "Zero";
    case ReductionStrategy::UnitDenominator: return "UnitDenominator";
    case ReductionStrategy::PinnedSearch: return "PinnedSearch";
  }
  return "?";
}

RealPoly pin_polynomial(const DiscElement& g) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "pin_polynomial of zero");
  RealPoly pin = RealPoly::constant(1);
  for (const auto& [factor, mult] : squarefree_factors(g.num())) {
    const bool circle = gcd(factor, factor.reciprocal()).degree() > 0;
    std::vector<ComplexVal> inside;
    int outside = 0;
    for (const auto& r : roots(factor)) {
      if (classify(r, circle) == Side::Inside) {
        inside.push_back(r.value);
      } else {
        ++outside;
      }
    }
    if (inside.empty()) continue;
    RealPoly part = factor;
    if (outside > 0) {
      // The real product of the inside roots is real because roots come in
      // conjugate pairs; keep it only if it divides exactly.
      RealPoly cand = RealPoly::constant(1);
      for (const auto& r : inside) {
        if (std::abs(r.imag()) == 0.0) {
          cand *= RealPoly({approximate(-r.real(), 1000000), Rational(1)});
        } else if (r.imag() > 0) {
          cand *= RealPoly({approximate(std::norm(r), 1000000), approximate(-2 * r.real(), 1000000), Rational(1)});
        }
      }
      if (cand.degree() == static_cast<int>(inside.size()) && divmod(factor, cand).remainder.is_zero()) {
        part = cand;
      }
    }
    pin *= part.pow(static_cast<unsigned>(mult));
  }
  return pin.monic();
}

std::optional<std::vector<Rational>> snap_and_certify(const std::vector<double>& x, double margin_target,
                                                      const std::function<RealPoly(const std::vector<Rational>&)>& build,
                                                      UnitCertificate* cert_out) {
  static const long kLevels[] = {1, 2, 4, 8, 16, 64, 256, 1024, 10000, 1000000};
  std::vector<Rational> last;
  auto attempt = [&](const std::vector<Rational>& q) -> bool {
    if (q == last) return false;
    last = q;
    try {
      UnitVerdict v = certify_unit(build(q));
      if (auto* c = std::get_if<UnitCertificate>(&v); c && c->margin >= margin_target) {
        if (cert_out) *cert_out = *c;
        return true;
      }
    } catch (const Error&) {
    }
    return false;
  };
  for (long den : kLevels) {
    std::vector<Rational> q;
    for (double v : x) q.push_back(approximate(v, den));
    if (attempt(q)) return q;
  }
  std::vector<Rational> q;
  for (double v : x) q.push_back(from_double(v));
  if (attempt(q)) return q;
  return std::nullopt;
}

ReductionWitness find_h(const DiscElement& f, const DiscElement& g, const SearchOptions& opts) {
  if (opts.max_degree < 0 || opts.budget <= 0 || !(opts.margin_target > 0)) {
    throw Error(ErrorKind::InvalidArgument, "search options must be positive");
  }
  if (!certified(is_invertible_pair(f, g))) throw Error(ErrorKind::NotInvertiblePair, "(F, G) is not invertible");
  if (!constant_sign_on_real_zeros(f, g).holds) {
    throw Error(ErrorKind::ReducibilityViolated, "F changes sign on the real zeros of G");
  }

  ReductionWitness w;
  if (!f.is_zero()) {
    UnitVerdict v = is_unit(f);
    if (auto* c = std::get_if<UnitCertificate>(&v); c && c->margin >= opts.margin_target) {
      w.strategy = ReductionStrategy::Zero;
      w.unit_cert = *c;
      return w;
    }
  }
  if (!g.is_zero() && certified(is_unit(g))) {
    w.strategy = ReductionStrategy::UnitDenominator;
    w.h = divide(DiscElement::constant(1) - f, g);
    w.unit_cert = constant_certificate(1.0);
    return w;
  }

  // Here G is not a unit, so F is nonzero at G's disc zeros and P != 1.
  const RealPoly pin = pin_polynomial(g);
  const RealPoly q = exact_divide(g.num(), pin);
  const RealPoly& a = f.num();
  const RealPoly& b = f.den();
  const auto a_d = a.to_double();
  const auto p_d = pin.to_double();
  const int dim = opts.max_degree + 1;
  const double search_target = std::max(4 * opts.margin_target, 1e-4);

  std::vector<double> coeffs;
  std::vector<ComplexVal> warm;
  Objective objective = [&](const std::vector<double>& t) {
    coeffs.assign(std::max(a_d.size(), p_d.size() + t.size() - 1), 0.0);
    for (std::size_t k = 0; k < a_d.size(); ++k) coeffs[k] += a_d[k];
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < p_d.size(); ++j) coeffs[i + j] += t[i] * p_d[j];
    }
    QuickRootScan scan = quick_root_scan(coeffs, search_target, warm);
    Score s;
    s.interior = scan.interior;
    s.penalty = scan.penalty;
    s.tie = -scan.min_modulus;
    if (!scan.converged) s.penalty += 1.0;
    return s;
  };
  auto build = [&](const std::vector<Rational>& t) {
    return a + RealPoly(t) * pin;
  };
  std::optional<std::vector<Rational>> found;
  UnitCertificate cert;
  Acceptor accept = [&](const std::vector<double>& t, const Score&) {
    found = snap_and_certify(t, opts.margin_target, build, &cert);
    return found.has_value();
  };

  SearchConfig config;
  config.dimension = dim;
  config.budget = opts.budget;
  config.seed = opts.seed;
  config.scale = std::max(1.0, sup_abs(a) / std::max(sup_abs(pin), 1e-300));
  for (auto& s : detail::unit_interpolation_starts(a, b, pin, dim, 4)) config.starts.push_back(std::move(s));
  config.starts.push_back(std::vector<double>(dim, 0.0));
  for (double c : {-1.0, 1.0, -0.5, 0.5, -2.0, 2.0, -4.0, 4.0, -0.25, 0.25, -8.0, 8.0}) {
    std::vector<double> s(dim, 0.0);
    s[0] = c * config.scale;
    config.starts.push_back(std::move(s));
  }
  SearchOutcome outcome = minimize(config, objective, accept);
  if (!found) {
    const double best_margin =
        outcome.best.empty() ? -1.0 : -outcome.best_score.tie - 1.0;
    throw BudgetExhausted("no unit F + hG found within " + std::to_string(outcome.evaluations) + " evaluations",
                          outcome.evaluations, best_margin);
  }
  w.strategy = ReductionStrategy::PinnedSearch;
  w.h = DiscElement::fraction(RealPoly(*found) * g.den(), b * q);
  w.evaluations = outcome.evaluations;
  const DiscElement u = f + w.h * g;
  UnitVerdict check = is_unit(u);
  auto* c = std::get_if<UnitCertificate>(&check);
  if (!c) throw Error(ErrorKind::IdentityViolated, "internal: reparametrised candidate is not a unit");
  w.unit_cert = *c;
  return w;
}

}  // namespace discstab
