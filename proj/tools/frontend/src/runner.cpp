#include "discstab/frontend/runner.hpp"

#include <chrono>
#include <exception>
#include <string>
#include <vector>

#include "discstab/bezout.hpp"
#include "discstab/cert.hpp"
#include "discstab/counterexample.hpp"
#include "discstab/frontend/expr.hpp"
#include "discstab/frontend/printer.hpp"
#include "discstab/sign_analysis.hpp"
#include "discstab/stabilize.hpp"

namespace discstab::frontend {

namespace {

using ojson = nlohmann::ordered_json;

ojson poly_json(const RealPoly& p) {
  ojson coeffs = ojson::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

ojson element_json(const DiscElement& a) {
  ojson j;
  j["expr"] = print_element(a);
  j["num"] = poly_json(a.num());
  j["den"] = poly_json(a.den());
  return j;
}

const char* method_name(CertMethod m) {
  return m == CertMethod::RootLocation ? "RootLocation" : "ArgumentPrinciple";
}

ojson cert_json(const UnitCertificate& c) {
  ojson j;
  j["method"] = method_name(c.method);
  j["margin"] = format_double(c.margin);
  j["min_root_modulus"] = format_double(c.min_root_modulus);
  j["interior_zero_count"] = c.interior_zero_count;
  j["boundary_min_modulus_lower"] = format_double(c.boundary_min_modulus_lower);
  j["valid"] = c.valid();
  return j;
}

ojson interval_json(const IsolatingInterval& x) {
  ojson j;
  j["lo"] = to_string(x.lo);
  j["hi"] = to_string(x.hi);
  j["midpoint"] = format_double(x.midpoint());
  j["multiplicity"] = x.multiplicity;
  return j;
}

ojson sign_report_json(const SignReport& r) {
  ojson j;
  j["verdict"] = to_string(r.verdict);
  j["determinant"] = element_json(r.determinant);
  j["proportional"] = r.proportional;
  ojson pts = ojson::array();
  for (const auto& p : r.points) {
    ojson q = interval_json(p.x);
    q["lambda"] = format_double(p.lambda);
    q["lambda_error"] = format_double(p.lambda_error);
    q["pivot"] = to_string(p.source);
    pts.push_back(q);
  }
  j["singular_points"] = pts;
  return j;
}

PolarGrid polar_grid(const Options& o) { return {std::max(8, o.grid / 4), o.grid}; }

ojson run_corona(const std::vector<ElementPair>& pairs, const Options& o) {
  const auto& [f, g] = pairs[0];
  const CoronaVerdict v = is_invertible_pair(f, g, polar_grid(o));
  ojson j;
  if (const auto* c = std::get_if<CoronaCertificate>(&v)) {
    j["verdict"] = "Invertible";
    j["delta_lower"] = format_double(c->delta_lower);
    j["witness_kind"] = c->witness_kind == CoronaWitness::NoCommonRoots ? "NoCommonRoots" : "GridLowerBound";
    j["common_factor"] = print_poly(c->common_factor);
    const std::vector<DiscElement> fs{f, g};
    if (const auto x = corona_witness(fs)) {
      ojson w = ojson::array();
      for (const auto& xi : *x) w.push_back(element_json(xi));
      j["witness"] = w;
    }
  } else {
    const auto& n = std::get<NotInvertible>(v);
    j["verdict"] = "NotInvertible";
    j["reason"] = n.reason;
    if (n.common_root) {
      j["common_root"] = ojson::array({format_double(n.common_root->real()), format_double(n.common_root->imag())});
    }
  }
  return j;
}

ojson run_bezout(const std::vector<ElementPair>& pairs) {
  const auto& [f, g] = pairs[0];
  const BezoutSolution s = solve_bezout(f, g);
  ojson j;
  j["alpha"] = element_json(s.alpha);
  j["beta"] = element_json(s.beta);
  j["exact"] = s.exact;
  j["identity"] = print_element(s.alpha * f + s.beta * g);
  return j;
}

ojson run_stabilize(const std::vector<ElementPair>& pairs, const Options& o) {
  const StabilizationResult r = simultaneous_stabilize(pairs[0], pairs[1], o.search);
  ojson j;
  j["alpha"] = element_json(r.alpha);
  j["beta"] = element_json(r.beta);
  j["h"] = element_json(r.h_used);
  j["strategy"] = to_string(r.strategy);
  ojson targets = ojson::array();
  for (std::size_t i = 0; i < 2; ++i) {
    ojson t;
    t["value"] = element_json(r.alpha * pairs[i].f + r.beta * pairs[i].g);
    t["unit_certificate"] = cert_json(r.unit_certs[i]);
    targets.push_back(t);
  }
  j["targets"] = targets;
  j["sign_report"] = sign_report_json(r.sign_report);
  return j;
}

ojson run_total_reduce(const std::vector<ElementPair>& pairs, const Options& o) {
  const auto& [f, g] = pairs[0];
  const std::vector<Rational> xs = o.x_candidates ? *o.x_candidates : default_x_candidates();
  const TotalReduceResult r = total_reduce(f, g, xs, o.search);
  ojson j;
  j["u"] = element_json(r.u);
  j["v"] = element_json(r.v);
  j["m"] = to_string(r.m);
  j["x"] = to_string(r.x);
  j["eps"] = to_string(r.eps);
  j["base_h"] = element_json(r.base_h);
  j["base_v"] = element_json(r.base_v);
  j["identity"] = print_element(r.u * f + r.v * g);
  j["u_certificate"] = cert_json(r.u_cert);
  j["v_certificate"] = cert_json(r.v_cert);
  j["f_minus_m_norm"] = format_double(r.f_minus_m_norm);
  j["base_h_norm"] = format_double(r.base_h_norm);
  return j;
}

ojson run_counterexample(const Options& o) {
  const TripleInstance t = make_triple(o.n);
  const FalsificationReport r = falsify(t, o.search);
  ojson j;
  j["n"] = r.n;
  ojson pairs = ojson::array();
  for (const auto& p : t.pairs) pairs.push_back(ojson::array({print_element(p.f), print_element(p.g)}));
  j["pairs"] = pairs;
  ojson links = ojson::array();
  for (const auto& s : t.sign_reports) links.push_back(sign_report_json(s));
  j["sign_reports"] = links;
  j["verdict"] = to_string(r.verdict);
  j["best_margin"] = format_double(r.best_margin);
  ojson h = ojson::array();
  for (const auto& c : r.best_h) h.push_back(to_string(c));
  j["best_h"] = h;
  j["budget_used"] = r.budget_used;
  j["certification_attempts"] = r.certification_attempts;
  if (r.witness_certs) {
    ojson w = ojson::array();
    for (const auto& c : *r.witness_certs) w.push_back(cert_json(c));
    j["witness_certificates"] = w;
  }
  return j;
}

ojson error_json(const Error& e) {
  ojson j;
  j["kind"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  if (const auto* b = dynamic_cast<const BudgetExhausted*>(&e)) {
    j["evaluations"] = b->evaluations();
    j["best_margin"] = format_double(b->best_margin());
  }
  return j;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotUnitDenominator:
    case ErrorKind::NotInvertiblePair:
    case ErrorKind::NotInvertible:
    case ErrorKind::NotASolution:
    case ErrorKind::NotAntisymmetric:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ReducibilityViolated:
    case ErrorKind::NotSignLinked:
    case ErrorKind::NoAdmissibleValue:
      return kExitPrecondition;
    case ErrorKind::BudgetExhausted:
      return kExitBudget;
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
      return kExitInput;
    case ErrorKind::EvalNearPole:
    case ErrorKind::NoConvergence:
    case ErrorKind::BoundaryZero:
    case ErrorKind::Indeterminate:
    case ErrorKind::DegeneratePivot:
      return kExitNumerical;
    case ErrorKind::IdentityViolated:
    case ErrorKind::InconsistentSolutions:
      return kExitInternal;
  }
  return kExitInternal;
}

RunResult run(const ProblemFile& problem, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  RunResult out;
  ojson& doc = out.document;
  doc["task"] = to_string(problem.task);
  ojson input;
  ojson texts = ojson::array();
  for (const auto& [a, b] : problem.pairs) texts.push_back(ojson::array({a, b}));
  input["pairs"] = texts;
  input["options"] = to_json(problem.options);
  doc["input"] = input;

  auto fail = [&](const ojson& err, int code) {
    doc["status"] = "error";
    doc["error"] = err;
    out.exit_code = code;
  };

  std::vector<ElementPair> pairs;
  try {
    ojson canonical = ojson::array();
    for (const auto& [a, b] : problem.pairs) {
      ElementPair p{parse_element(a), parse_element(b)};
      canonical.push_back(ojson::array({print_element(p.f), print_element(p.g)}));
      pairs.push_back(std::move(p));
    }
    doc["input"]["elements"] = canonical;
  } catch (const Error& e) {
    // Anything wrong with the expressions themselves is an input error,
    // except when certification could not decide.
    fail(error_json(e), e.kind() == ErrorKind::Indeterminate ? kExitNumerical : kExitInput);
  }

  if (out.exit_code == kExitOk) {
    try {
      ojson result;
      switch (problem.task) {
        case Task::Corona: result = run_corona(pairs, problem.options); break;
        case Task::Bezout: result = run_bezout(pairs); break;
        case Task::SignLinked: result = sign_report_json(is_sign_linked(pairs[0], pairs[1])); break;
        case Task::Stabilize: result = run_stabilize(pairs, problem.options); break;
        case Task::TotalReduce: result = run_total_reduce(pairs, problem.options); break;
        case Task::Counterexample: result = run_counterexample(problem.options); break;
      }
      doc["status"] = "ok";
      doc["result"] = result;
    } catch (const Error& e) {
      fail(error_json(e), exit_code_for(e.kind()));
    } catch (const std::exception& e) {
      fail(ojson{{"kind", "Internal"}, {"message", e.what()}}, kExitInternal);
    }
  }

  if (timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["timing"] = ojson{{"elapsed_ms", format_double(ms)}};
  }
  return out;
}

}  // namespace discstab::frontend
