#pragma once

#include <nlohmann/json.hpp>

#include "discstab/errors.hpp"
#include "discstab/frontend/problem.hpp"

namespace discstab::frontend {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitPrecondition = 2,
  kExitBudget = 3,
  kExitInput = 4,
  kExitNumerical = 5,
};

int exit_code_for(ErrorKind kind);

struct RunResult {
  nlohmann::ordered_json document;
  int exit_code = kExitOk;
};

/// Parses the pairs, dispatches the task and builds the result document.
/// Library errors become an "error" section plus the matching exit code;
/// nothing is thrown. Wall-clock timing is added only when asked for, so by
/// default the document is a pure function of the problem.
RunResult run(const ProblemFile& problem, bool timing = false);

}  // namespace discstab::frontend
