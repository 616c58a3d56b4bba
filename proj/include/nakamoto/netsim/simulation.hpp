#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakamoto/consensus/chain_view.hpp"
#include "nakamoto/netsim/metrics.hpp"
#include "nakamoto/netsim/scenario.hpp"

namespace nakamoto::netsim {

struct RunOptions {
  bool keep_trace = false;  // return the trace lines besides their digest
  bool track_forks = true;
  /// Drain messages after the stop time and break honest ties so that every
  /// honest view ends on one tip.
  bool settle = true;
  /// Sampled mining only: draw block winners with these powers instead of
  /// the configured ones and accumulate the likelihood ratio of the run in
  /// AttackOutcome::log_weight. Powers must have the configured total.
  std::optional<std::map<std::string, double>> sampling_powers;
};

struct RunResult {
  std::uint64_t seed = 0;
  SimTime end = 0;
  std::map<std::string, consensus::ChainView> views;  // every participant's chain at the end
  consensus::ChainView reference;                     // heaviest honest view
  bool converged = false;                             // all honest views share one tip
  std::map<std::string, ledger::Address> addresses;   // key-holding participants
  Metrics metrics;
  std::string trace_digest;  // hex SHA-256 of the trace lines
  std::vector<std::string> trace;

  /// JSON objects, one per line, describing the run.
  std::vector<std::string> json_lines(const ScenarioConfig& config) const;
};

/// Runs the scenario with the given seed; the config's own seed is ignored.
/// Throws InvalidConfig when the config does not validate.
RunResult run(const ScenarioConfig& config, std::uint64_t seed, const RunOptions& options = {});

/// Adjusts hash powers so that the attacker holds `q` and the honest miners
/// share 1 - q in their configured proportions.
ScenarioConfig with_attacker_power(ScenarioConfig config, double q);

}  // namespace nakamoto::netsim
