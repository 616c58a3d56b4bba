#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nakamoto/netsim/simulation.hpp"

namespace nakamoto::netsim {

/// One double-spend run: the config's attacker gets power q (honest miners
/// share the rest) and the victim acts at k_c confirmations. Under the
/// tilted estimator the attacker draws blocks with power `tilt` and the
/// outcome carries the likelihood ratio in log_weight.
AttackOutcome double_spend_attack(const ScenarioConfig& config, double q, std::uint64_t confirmations,
                                  std::uint64_t seed, Estimator estimator = Estimator::plain, double tilt = 0.5);

struct LogFit {
  bool defined = false;  // false when a rate is zero or fewer than two points
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

/// Least squares of log(y) on x.
LogFit log_linear_fit(const std::vector<double>& x, const std::vector<double>& y);

struct StudyPoint {
  double q = 0;
  std::uint64_t confirmations = 0;
  std::uint64_t runs = 0;
  std::uint64_t successes = 0;  // runs that succeeded, whatever their weight
  double rate = 0;              // estimated success probability
  double std_error = 0;
};

struct StudyCurve {
  double q = 0;
  std::vector<StudyPoint> points;  // in the order of the confirmations list
  bool monotone = false;           // rate never increases with confirmations
  LogFit fit;
};

struct DoubleSpendStudy {
  Estimator estimator = Estimator::plain;
  double tilt = 0;
  std::vector<StudyCurve> curves;

  std::vector<std::string> json_lines() const;
};

/// Runs `mc.runs` seeded runs per (q, k_c). Run j uses the seed
/// derive_seed(seed, j) at every point, so the points share random numbers.
/// `workers` threads split the runs; results are merged in run order.
DoubleSpendStudy double_spend_study(const ScenarioConfig& config, const MonteCarloConfig& mc, std::uint64_t seed,
                                    unsigned workers = 1);

struct RewriteStudy {
  double q = 0;
  std::uint64_t confirmations = 0;
  std::uint64_t runs = 0;
  std::uint64_t successes = 0;  // runs where the victim dropped at least `confirmations` blocks
  double rate = 0;
  std::uint64_t shallowest = 0;  // smallest replaced depth among successes

  std::string json() const;
};

RewriteStudy majority_rewrite_study(const ScenarioConfig& config, double q, std::uint64_t confirmations,
                                    std::uint64_t runs, std::uint64_t seed, unsigned workers = 1);

/// Probability that an attacker with power q ever overtakes a public chain
/// once the victim has seen k confirmations, ignoring propagation delay:
/// the honest lead after k honest blocks is negative binomial, and a deficit
/// of d is overcome with probability (q/p)^(d+1).
double race_success_probability(double q, std::uint64_t k);

}  // namespace nakamoto::netsim
