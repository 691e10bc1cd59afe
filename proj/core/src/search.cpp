#include "discstab/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace discstab {

namespace {

class Runner {
 public:
  Runner(const SearchConfig& config, const Objective& objective, const Acceptor& accept)
      : config_(config), objective_(objective), accept_(accept), rng_(config.seed) {}

  SearchOutcome run() {
    for (const auto& s : config_.starts) {
      if (done()) return out_;
      std::vector<double> x = s;
      x.resize(config_.dimension, 0.0);
      evaluate(x);
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x = out_.best.empty() ? std::vector<double>(config_.dimension, 0.0) : out_.best;
    Score fx = out_.best.empty() ? evaluate(x) : out_.best_score;
    double step = 0.25 * config_.scale;
    while (!done()) {
      bool improved = false;
      for (int k = 0; k < config_.dimension && !done(); ++k) {
        for (double dir : {1.0, -1.0}) {
          if (done()) break;
          std::vector<double> y = x;
          y[k] += dir * step;
          Score fy = evaluate(y);
          if (fy < fx) {
            x = std::move(y);
            fx = fy;
            improved = true;
            break;
          }
        }
      }
      if (improved) {
        step *= 1.5;
        continue;
      }
      step *= 0.5;
      if (step > 1e-7 * config_.scale || done()) continue;
      // Restart: perturb the incumbent or jump to a fresh random point.
      const double spread = config_.scale * std::pow(10.0, 2.0 * unit(rng_) - 1.0);
      const bool fresh = unit(rng_) < 0.5 || out_.best.empty();
      std::vector<double> y = fresh ? std::vector<double>(config_.dimension, 0.0) : out_.best;
      for (auto& c : y) c += spread * gauss(rng_) * (fresh ? 1.0 : 0.1);
      x = y;
      fx = evaluate(x);
      step = 0.25 * spread;
    }
    return out_;
  }

 private:
  bool done() const { return out_.accepted || out_.evaluations >= config_.budget; }

  Score evaluate(const std::vector<double>& x) {
    ++out_.evaluations;
    Score s = objective_(x);
    if (out_.best.empty() || s < out_.best_score) {
      out_.best = x;
      out_.best_score = s;
    }
    if (s.feasible() && accept_ && accept_(x, s)) {
      out_.best = x;
      out_.best_score = s;
      out_.accepted = true;
    }
    return s;
  }

  const SearchConfig& config_;
  const Objective& objective_;
  const Acceptor& accept_;
  std::mt19937_64 rng_;
  SearchOutcome out_;
};

}  // namespace

SearchOutcome minimize(const SearchConfig& config, const Objective& objective, const Acceptor& accept) {
  return Runner(config, objective, accept).run();
}

}  // namespace discstab
