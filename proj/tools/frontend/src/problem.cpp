#include "discstab/frontend/problem.hpp"

#include <fstream>
#include <limits>

#include "discstab/errors.hpp"

namespace discstab::frontend {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::SchemaError, msg); }

long long integer_field(const json& v, const char* key, long long lo, long long hi) {
  long long out = 0;
  if (v.is_number_integer()) {
    out = v.get<long long>();
  } else if (v.is_string()) {
    Rational r;
    try {
      r = parse_rational(v.get<std::string>());
    } catch (const Error&) {
      schema(std::string("options.") + key + " is not a number");
    }
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) schema(std::string("options.") + key + " must be an integer");
    out = r.get_num().get_si();
  } else {
    schema(std::string("options.") + key + " must be an integer");
  }
  if (out < lo || out > hi) {
    schema(std::string("options.") + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return out;
}

Rational rational_field(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) schema(what + " must be a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error&) {
    schema(what + " is not a rational: '" + v.get<std::string>() + "'");
  }
}

}  // namespace

const char* to_string(Task t) {
  switch (t) {
    case Task::Corona: return "corona";
    case Task::Bezout: return "bezout";
    case Task::SignLinked: return "sign-linked";
    case Task::Stabilize: return "stabilize";
    case Task::TotalReduce: return "total-reduce";
    case Task::Counterexample: return "counterexample";
  }
  return "unknown";
}

Task task_from_string(std::string_view name) {
  for (Task t : {Task::Corona, Task::Bezout, Task::SignLinked, Task::Stabilize, Task::TotalReduce,
                 Task::Counterexample}) {
    if (name == to_string(t)) return t;
  }
  schema("unknown task '" + std::string(name) + "'");
}

int pair_count(Task t) {
  switch (t) {
    case Task::SignLinked:
    case Task::Stabilize:
      return 2;
    case Task::Counterexample:
      return 0;
    default:
      return 1;
  }
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const Error&) {
      schema("bad rational '" + std::string(item) + "' in candidate list");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ProblemFile problem_from_json(const json& doc) {
  if (!doc.is_object()) schema("problem document must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "task" && key != "pairs" && key != "options") schema("unknown top-level key '" + key + "'");
  }
  if (!doc.contains("task") || !doc["task"].is_string()) schema("'task' must be a string");
  ProblemFile p;
  p.task = task_from_string(doc["task"].get<std::string>());

  if (doc.contains("pairs")) {
    const json& pairs = doc["pairs"];
    if (!pairs.is_array()) schema("'pairs' must be an array");
    for (const json& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
        schema("each pair must be an array of two expression strings");
      }
      p.pairs.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
  }
  const int want = pair_count(p.task);
  if (static_cast<int>(p.pairs.size()) != want) {
    schema(std::string("task '") + to_string(p.task) + "' takes " + std::to_string(want) + " pair(s), got " +
           std::to_string(p.pairs.size()));
  }

  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) schema("'options' must be an object");
    Options& out = p.options;
    for (const auto& [key, v] : o.items()) {
      if (key == "max_degree") {
        out.search.max_degree = static_cast<int>(integer_field(v, "max_degree", 0, 32));
      } else if (key == "budget") {
        out.search.budget = static_cast<int>(integer_field(v, "budget", 1, std::numeric_limits<int>::max()));
      } else if (key == "seed") {
        out.search.seed = static_cast<std::uint64_t>(
            integer_field(v, "seed", 0, std::numeric_limits<long long>::max()));
      } else if (key == "grid") {
        out.grid = static_cast<int>(integer_field(v, "grid", 8, 1 << 20));
      } else if (key == "n") {
        out.n = static_cast<int>(integer_field(v, "n", 1, 1 << 16));
      } else if (key == "margin_target") {
        const Rational m = rational_field(v, "options.margin_target");
        if (m <= 0) schema("options.margin_target must be positive");
        out.margin_target = m;
        out.search.margin_target = m.get_d();
      } else if (key == "x_candidates") {
        if (!v.is_array() || v.empty()) schema("options.x_candidates must be a nonempty array");
        std::vector<Rational> xs;
        for (const json& x : v) xs.push_back(rational_field(x, "options.x_candidates entry"));
        out.x_candidates = std::move(xs);
      } else {
        schema("unknown option '" + key + "'");
      }
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot open problem file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    schema(std::string("problem file is not valid JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

nlohmann::ordered_json to_json(const Options& o) {
  nlohmann::ordered_json j;
  j["max_degree"] = o.search.max_degree;
  j["budget"] = o.search.budget;
  j["seed"] = o.search.seed;
  j["margin_target"] = to_string(o.margin_target);
  j["grid"] = o.grid;
  if (o.x_candidates) {
    auto xs = nlohmann::ordered_json::array();
    for (const auto& x : *o.x_candidates) xs.push_back(to_string(x));
    j["x_candidates"] = xs;
  }
  j["n"] = o.n;
  return j;
}

}  // namespace discstab::frontend
