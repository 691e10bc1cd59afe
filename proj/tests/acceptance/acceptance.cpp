// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "discstab/bezout.hpp"
#include "discstab/cert.hpp"
#include "discstab/counterexample.hpp"
#include "discstab/errors.hpp"
#include "discstab/frontend/expr.hpp"
#include "discstab/frontend/printer.hpp"
#include "discstab/frontend/runner.hpp"
#include "discstab/roots.hpp"
#include "discstab/stabilize.hpp"
#include "helpers.hpp"

using namespace discstab;
using testing_support::el;

namespace {

const DiscElement one = DiscElement::constant(1);
const DiscElement zero;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

bool exact_identity(const DiscElement& a, const DiscElement& b, const DiscElement& f, const DiscElement& g) {
  const auto lhs = oracle::add(oracle::mul(testing_support::to_oracle(a), testing_support::to_oracle(f)),
                               oracle::mul(testing_support::to_oracle(b), testing_support::to_oracle(g)));
  return oracle::same(lhs, {{1}, {1}});
}

Outcome bezout_exactness() {
  Outcome o;
  std::mt19937_64 rng(1001);
  double t = 0, setup = 0;
  int done = 0, bad = 0;
  while (done < 200) {
    const auto s0 = std::chrono::steady_clock::now();
    const DiscElement f = testing_support::random_element(rng, 8, 10);
    const DiscElement g = testing_support::random_element(rng, 8, 10);
    const bool usable = !f.is_zero() && !g.is_zero() && certified(is_invertible_pair(f, g));
    setup += seconds_since(s0);
    if (!usable) continue;
    ++done;
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = solve_bezout(f, g);
    const bool zero_residual = (s.alpha * f + s.beta * g - one).is_zero();
    t += seconds_since(t0);
    if (!s.exact || !zero_residual || !exact_identity(s.alpha, s.beta, f, g)) ++bad;
  }
  o.pass = bad == 0 && t <= 10.0;
  o.detail = std::to_string(done - bad) + "/200 exact residuals, " + fmt("%.2f s solving (limit 10 s)", t) +
             fmt(", %.2f s generating and certifying inputs", setup);
  return o;
}

Outcome triple_geometry() {
  Outcome o;
  double worst_x = 0, worst_l = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto t = make_triple(n);
    const auto& pts = t.sign_reports[2].points;
    if (pts.size() != 2 || !t.sign_reports[2].linked()) {
      o.pass = false;
      continue;
    }
    int signs = 0;
    for (const auto& p : pts) {
      worst_x = std::max(worst_x, std::abs(std::abs(p.x.midpoint()) - 1 / std::sqrt(double(n))));
      worst_l = std::max(worst_l, std::abs(p.lambda - n));
      signs += p.x.midpoint() > 0 ? 1 : -1;
    }
    if (signs != 0) o.pass = false;
  }
  o.pass = o.pass && worst_x <= 1e-10 && worst_l <= 1e-10;
  o.detail = "n=1..10, max |x - 1/sqrt n| = " + fmt("%.2e", worst_x) + ", max |lambda - n| = " + fmt("%.2e", worst_l) +
             " (tol 1e-10)";
  return o;
}

Outcome negative_control() {
  Outcome o;
  const DiscElement f = el({0, 1}), g = el({1, 0, -1});
  const auto r = is_sign_linked({one, zero}, {f, g});
  const ErrorKind k = kind_of([&] { find_h(f, g); });
  o.pass = r.verdict == SignLinkVerdict::NotSignLinked && k == ErrorKind::ReducibilityViolated;
  o.detail = std::string("sign-linked: ") + to_string(r.verdict) + ", find_h: " + std::string(to_string(k));
  return o;
}

Outcome squares_pipeline() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coeff(-5, 5), degree(0, 4);
  auto random_poly = [&] {
    std::vector<Rational> c(degree(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    RealPoly p(c);
    return DiscElement::from_poly(p.is_zero() ? RealPoly{1} : p);
  };
  int done = 0, ok = 0, exhausted = 0, failed = 0;
  while (done < 50) {
    const DiscElement f1 = random_poly(), g1 = random_poly(), f2 = random_poly(), g2 = random_poly();
    if (!certified(is_invertible_pair(f1 * f1, g1)) || !certified(is_invertible_pair(f2 * f2, g2))) continue;
    ++done;
    try {
      const auto r = stabilize_squares({f1, g1}, {f2, g2});
      const auto v = is_unit(r.alpha * f2 * f2 + r.beta * g2);
      const bool good = exact_identity(r.alpha, r.beta, f1 * f1, g1) && certified(v) &&
                        std::get<UnitCertificate>(v).margin >= 1e-6;
      good ? ++ok : ++failed;
    } catch (const BudgetExhausted&) {
      ++exhausted;
    } catch (const Error&) {
      ++failed;
    }
  }
  o.pass = failed == 0 && exhausted * 20 <= done;
  o.detail = std::to_string(ok) + " stabilized, " + std::to_string(exhausted) + " BudgetExhausted (" +
             fmt("%.0f%%", 100.0 * exhausted / done) + ", limit 5%), " + std::to_string(failed) + " other";
  return o;
}

Outcome total_reduce_example() {
  Outcome o;
  const DiscElement f = DiscElement::fraction(testing_support::poly({1, 2, 1}), testing_support::poly({4}));
  const DiscElement g = el({3, 1});
  const auto r = total_reduce(f, g, {Rational(-1, 10)});
  const DiscElement den = DiscElement::constant(20) * f + DiscElement::constant(2);
  const DiscElement u = divide(DiscElement::constant(21), den);
  const DiscElement v = divide(-(f - DiscElement::constant(2)), den * g);
  o.pass = r.u == u && r.v == v && exact_identity(r.u, r.v, f, g) && r.u_cert.valid() && r.v_cert.valid() &&
           r.u_cert.margin >= 0.1 && r.v_cert.margin >= 0.1;
  o.detail = "u = " + frontend::print_element(r.u) + ", margins " + fmt("%.3f", r.u_cert.margin) + " / " +
             fmt("%.3f", r.v_cert.margin) + " (min 0.1)";
  return o;
}

Outcome parametrization() {
  Outcome o;
  std::mt19937_64 rng(1006);
  int round_trips = 0, preserved = 0;
  for (int done = 0; done < 100;) {
    const ElementPair f{testing_support::random_element(rng, 4, 6), testing_support::random_element(rng, 4, 6)};
    if (f.f.is_zero() || f.g.is_zero() || !certified(is_invertible_pair(f.f, f.g))) continue;
    const DiscElement h = testing_support::random_element(rng, 4, 6);
    const auto x = solve_bezout(f.f, f.g);
    const auto y = transform_solution(x, f, h);
    round_trips += exact_identity(y.alpha, y.beta, f.f, f.g) && recover_h(x, y, f) == h;
    ++done;
  }
  for (int done = 0; done < 100;) {
    const Tuple f{testing_support::random_element(rng, 3, 5), testing_support::random_element(rng, 3, 5)};
    if (!certified(is_invertible_tuple(f))) continue;
    const DiscElement a = testing_support::random_element(rng, 3, 5);
    const DiscElement u = testing_support::random_poly_element(rng, 2, 5);
    if (u.is_zero() || !certified(is_unit(u))) continue;
    const auto r = apply_matrix({{u, u * a}, {zero, one}}, f);
    preserved += r.determinant_unit && r.g_invertible && inner(r.witness, r.g) == one;
    ++done;
  }
  o.pass = round_trips == 100 && preserved == 100;
  o.detail = std::to_string(round_trips) + "/100 h recovered, " + std::to_string(preserved) +
             "/100 unit-determinant transforms invertible";
  return o;
}

Outcome counterexample_evidence() {
  Outcome o;
  SearchOptions opts;
  opts.max_degree = 6;
  opts.budget = 20000;
  opts.seed = 7;
  const auto t0 = std::chrono::steady_clock::now();
  double previous = INFINITY;
  bool monotone = true;
  std::string margins;
  for (int n : {2, 4, 8, 16}) {
    const auto t = make_triple(n);
    const auto r = falsify(t, opts);
    if (r.verdict != FalsificationVerdict::NoWitnessFound || r.witness_certs) o.pass = false;
    const auto v = verify_candidate(t, one, DiscElement::from_poly(RealPoly(r.best_h)));
    if (certified(v[0]) && certified(v[1]) && certified(v[2])) o.pass = false;
    if (r.best_margin > previous + 1e-12) monotone = false;
    previous = r.best_margin;
    margins += (margins.empty() ? "" : ", ") + fmt("%.4g", r.best_margin);
  }
  const double t = seconds_since(t0);
  o.pass = o.pass && monotone && t <= 60.0;
  o.detail = "NoWitnessFound at n=2,4,8,16, best margins " + margins + (monotone ? " (non-increasing)" : " (increasing!)") +
             ", " + fmt("%.1f s (limit 60 s)", t);
  return o;
}

Outcome corollary_constraints() {
  Outcome o;
  double worst = 0;
  for (int n : {1, 2, 4}) {
    const auto s = solve_bezout(el({0, 0, 1}), el({1, 0, 0, 0, -n * n}));
    const double r = 1 / std::sqrt(double(n));
    for (ComplexVal p : {ComplexVal(r, 0), ComplexVal(-r, 0)}) worst = std::max(worst, std::abs(eval(s.alpha, p) - double(n)));
    for (ComplexVal p : {ComplexVal(0, r), ComplexVal(0, -r)}) worst = std::max(worst, std::abs(eval(s.alpha, p) + double(n)));
  }
  o.pass = worst <= 1e-9;
  o.detail = "max deviation " + fmt("%.2e", worst) + " (tol 1e-9)";
  return o;
}

Outcome certifier_agreement() {
  Outcome o;
  std::mt19937_64 rng(1009);
  int agree = 0, units = 0;
  for (int i = 0; i < 500; ++i) {
    const auto pr = oracle::planted(rng, 10, 1e-6);
    const RealPoly p(pr.p);
    int by_roots = 0;
    for (const auto& r : roots(p)) {
      if (std::abs(r.value) < 1.0) by_roots += r.multiplicity;
    }
    const int by_winding = winding_count(p.to_double());
    const bool unit = certified(certify_unit(p));
    agree += (by_roots == 0) == (by_winding == 0) && by_roots == pr.inside && unit == (pr.inside == 0);
    units += unit;
  }
  o.pass = agree == 500;
  o.detail = std::to_string(agree) + "/500 verdicts agree (" + std::to_string(units) + " units)";
  return o;
}

frontend::ProblemFile problem(frontend::Task t, std::vector<std::array<std::string, 2>> pairs) {
  frontend::ProblemFile p;
  p.task = t;
  p.pairs = std::move(pairs);
  return p;
}

Outcome cli_round_trip() {
  using frontend::Task;
  Outcome o;
  std::mt19937_64 rng(1010);
  int round_trips = 0;
  for (int i = 0; i < 500; ++i) {
    const DiscElement a = testing_support::random_element(rng, 6, 12);
    round_trips += frontend::parse_element(frontend::print_element(a)) == a;
  }
  auto budget = problem(Task::Stabilize, {{"4", "2 - 4*z"}, {"(5 + 4*z - 5*z^2)^2", "-1 + 5*z"}});
  budget.options.search.budget = 1;
  const std::pair<int, frontend::ProblemFile> runs[] = {
      {frontend::kExitOk, problem(Task::Stabilize, {{"1", "0"}, {"z^2", "1 - z^2"}})},
      {frontend::kExitPrecondition, problem(Task::Bezout, {{"z", "z^3"}})},
      {frontend::kExitBudget, budget},
      {frontend::kExitInput, problem(Task::Corona, {{"z^-1", "1"}})},
      {frontend::kExitNumerical, problem(Task::Corona, {{"1/(z - 1 - 1/1000000000000)", "1"}})},
  };
  int codes = 0;
  for (const auto& [want, p] : runs) codes += frontend::run(p).exit_code == want;
  const ErrorKind internal[] = {ErrorKind::IdentityViolated, ErrorKind::InconsistentSolutions};
  for (ErrorKind k : internal) codes += frontend::exit_code_for(k) == frontend::kExitInternal;
  o.pass = round_trips == 500 && codes == 7;
  o.detail = std::to_string(round_trips) + "/500 parse(print(x)) == x, " + std::to_string(codes) +
             "/7 exit-code classes (0, 2, 3, 4, 5 by run; 1 by mapping)";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"Bezout exactness", bezout_exactness},
      {"triple geometry", triple_geometry},
      {"negative control", negative_control},
      {"squares pipeline", squares_pipeline},
      {"total-reduce example", total_reduce_example},
      {"parametrization round trip", parametrization},
      {"counterexample evidence", counterexample_evidence},
      {"corollary constraints", corollary_constraints},
      {"certifier agreement", certifier_agreement},
      {"CLI round trip", cli_round_trip},
  };
  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%-4s %2d %-28s %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
