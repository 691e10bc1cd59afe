#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace discstab {

/// Lexicographic objective (smaller is better): zero count in the closed
/// disc, then the soft penalty, then the negated smallest root modulus.
struct Score {
  int interior = 1 << 20;
  double penalty = 1e300;
  double tie = 0.0;

  bool feasible() const { return interior == 0 && penalty == 0.0; }
  friend bool operator<(const Score& a, const Score& b) {
    if (a.interior != b.interior) return a.interior < b.interior;
    if (a.penalty != b.penalty) return a.penalty < b.penalty;
    return a.tie < b.tie;
  }
};

struct SearchConfig {
  int dimension = 1;
  int budget = 20000;
  std::uint64_t seed = 7;
  /// Starting points evaluated before any random move, in order.
  std::vector<std::vector<double>> starts;
  /// Typical coordinate magnitude for random restarts.
  double scale = 1.0;
};

struct SearchOutcome {
  std::vector<double> best;
  Score best_score;
  int evaluations = 0;
  bool accepted = false;
};

using Objective = std::function<Score(const std::vector<double>&)>;
/// Called for every point whose score is feasible; returning true ends the
/// search. Rejections let the search continue past points that fail exact
/// certification.
using Acceptor = std::function<bool(const std::vector<double>&, const Score&)>;

/// Deterministic derivative-free minimisation: the configured starts, then
/// compass (coordinate pattern) search from the incumbent with step
/// halving, restarted from seeded random points when the step collapses.
/// Every objective call counts against the budget.
SearchOutcome minimize(const SearchConfig& config, const Objective& objective, const Acceptor& accept);

}  // namespace discstab
