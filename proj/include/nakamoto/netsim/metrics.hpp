#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakamoto/ledger/profile.hpp"
#include "nakamoto/netsim/time.hpp"

namespace nakamoto::netsim {

struct TxLatency {
  std::string label;  // "actions[i]" or "service:<op>:<user>"
  std::string tx;     // id hex
  SimTime submitted = 0;
  std::optional<SimTime> included;  // time the including block of the final chain was mined
};

/// Interval during which honest views sat on different branches.
struct ForkSpan {
  SimTime start = 0;
  std::optional<SimTime> end;
  std::size_t branches = 0;  // most branches seen at once
};

struct SupplySample {
  SimTime time = 0;
  std::uint64_t height = 0;
  ledger::Amount minted;
};

struct MinerEarnings {
  std::uint64_t blocks = 0;  // blocks of the final chain
  ledger::Amount earned;     // rewards plus fees
};

struct AttackOutcome {
  bool success = false;
  bool victim_acted = false;
  std::optional<SimTime> acted_at;
  std::optional<SimTime> resolved_at;
  std::uint64_t replaced_depth = 0;  // blocks the victim dropped when switching
  std::uint64_t attacker_blocks = 0;
  std::uint64_t honest_blocks = 0;
  double log_weight = 0;  // importance weight of the run, log scale
  std::string reason;     // replaced | gave-up | horizon | premature
};

struct ServiceSnapshot {
  std::string id;
  ledger::Amount claims;
  ledger::Amount holdings;
  std::map<std::string, ledger::Amount> per_user;
};

struct Metrics {
  std::uint64_t blocks_mined = 0;
  std::vector<TxLatency> transactions;
  std::vector<ForkSpan> forks;
  std::vector<std::string> fork_reports;  // JSON objects from the fork detector
  std::vector<SupplySample> supply;
  std::map<std::string, MinerEarnings> miners;
  std::vector<ServiceSnapshot> services;
  std::vector<std::string> rejected;  // actions that could not be carried out, with reasons
  std::optional<AttackOutcome> attack;
};

/// One JSON object per line: tx, fork, fork-report, supply, miner, service,
/// rejected and attack records. Amounts are printed in units of `profile`.
std::vector<std::string> metrics_json_lines(const Metrics& m, const ledger::MoneyProfile& profile,
                                            const std::optional<std::string>& attack_kind = std::nullopt);

}  // namespace nakamoto::netsim
