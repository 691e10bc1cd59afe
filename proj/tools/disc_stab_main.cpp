#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "discstab/errors.hpp"
#include "discstab/frontend/problem.hpp"
#include "discstab/frontend/runner.hpp"

using namespace discstab;
using namespace discstab::frontend;

namespace {

struct Args {
  std::string task;
  std::string file;
  std::vector<std::string> pair1;
  std::vector<std::string> pair2;
  std::optional<long long> max_degree, budget, seed, grid, n;
  std::optional<std::string> x_candidates, margin_target;
  std::string out;
  bool timing = false;
};

// Command line values are folded into a problem document so the file and
// flag paths share one validator. Flags override file options.
ProblemFile build_problem(const Args& a) {
  nlohmann::json doc;
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw Error(ErrorKind::SchemaError, "cannot open problem file '" + a.file + "'");
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::SchemaError, std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::SchemaError, "problem document must be an object");
    if (doc.contains("task") && doc["task"] != a.task) {
      throw Error(ErrorKind::SchemaError, "problem file task does not match the command line task");
    }
  }
  doc["task"] = a.task;
  if (a.file.empty()) {
    nlohmann::json pairs = nlohmann::json::array();
    if (!a.pair1.empty()) pairs.push_back(a.pair1);
    if (!a.pair2.empty()) pairs.push_back(a.pair2);
    doc["pairs"] = pairs;
  } else if (!a.pair1.empty() || !a.pair2.empty()) {
    throw Error(ErrorKind::SchemaError, "--file cannot be combined with --pair1/--pair2");
  }
  nlohmann::json& o = doc["options"];
  if (o.is_null()) o = nlohmann::json::object();
  if (a.max_degree) o["max_degree"] = *a.max_degree;
  if (a.budget) o["budget"] = *a.budget;
  if (a.seed) o["seed"] = *a.seed;
  if (a.grid) o["grid"] = *a.grid;
  if (a.n) o["n"] = *a.n;
  if (a.margin_target) o["margin_target"] = *a.margin_target;
  if (a.x_candidates) {
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& x : parse_rational_list(*a.x_candidates)) xs.push_back(to_string(x));
    o["x_candidates"] = xs;
  }
  return problem_from_json(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified computations with rational elements of the real disc algebra"};
  Args a;
  app.add_option("task", a.task, "corona | bezout | sign-linked | stabilize | total-reduce | counterexample")
      ->required()
      ->check(CLI::IsMember({"corona", "bezout", "sign-linked", "stabilize", "total-reduce", "counterexample"}));
  auto* file = app.add_option("--file", a.file, "Problem document (JSON)");
  app.add_option("--pair1", a.pair1, "First pair: two expressions")->expected(2)->excludes(file);
  app.add_option("--pair2", a.pair2, "Second pair: two expressions")->expected(2)->excludes(file);
  app.add_option("--max-degree", a.max_degree, "Degree cap of searched polynomials");
  app.add_option("--budget", a.budget, "Candidate evaluations per search");
  app.add_option("--seed", a.seed, "Search seed");
  app.add_option("--grid", a.grid, "Corona polar grid angles");
  app.add_option("--x-candidates", a.x_candidates, "Comma separated rationals for total-reduce");
  app.add_option("--margin-target", a.margin_target, "Required unit margin (rational)");
  app.add_option("--n", a.n, "Triple parameter for counterexample");
  app.add_option("--out", a.out, "Write the result document here instead of stdout");
  app.add_flag("--timing", a.timing, "Add wall-clock timing to the result");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  RunResult r;
  try {
    r = run(build_problem(a), a.timing);
  } catch (const Error& e) {
    std::cerr << "disc-stab: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }

  const std::string text = r.document.dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!out) {
      std::cerr << "disc-stab: cannot write '" << a.out << "'\n";
      return kExitInternal;
    }
    out << text;
  }
  if (r.exit_code != kExitOk && r.document.contains("error")) {
    std::cerr << "disc-stab: " << r.document["error"]["message"].get<std::string>() << "\n";
  }
  return r.exit_code;
}
