#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "discstab/rational.hpp"
#include "discstab/reduce.hpp"

namespace discstab::frontend {

enum class Task { Corona, Bezout, SignLinked, Stabilize, TotalReduce, Counterexample };

const char* to_string(Task t);
using discstab::to_string;
/// Throws Error{SchemaError} for an unknown name.
Task task_from_string(std::string_view name);

/// Number of expression pairs a task consumes.
int pair_count(Task t);

struct Options {
  SearchOptions search;
  /// Exact form of search.margin_target.
  Rational margin_target{1, 1000000};
  /// Angles of the corona polar grid and points of the boundary sup-norm grid.
  int grid = 512;
  std::optional<std::vector<Rational>> x_candidates;
  int n = 4;
};

/// Pairs are kept as text so results can echo exactly what was given.
struct ProblemFile {
  Task task = Task::Corona;
  std::vector<std::array<std::string, 2>> pairs;
  Options options;
};

/// Validates and converts a problem document; throws Error{SchemaError}.
ProblemFile problem_from_json(const nlohmann::json& doc);

/// Reads a file holding a problem document; throws Error{SchemaError} for
/// unreadable files and malformed documents.
ProblemFile load_problem(const std::string& path);

nlohmann::ordered_json to_json(const Options& o);

/// Comma separated rationals, e.g. "-1/10,1/20".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace discstab::frontend
