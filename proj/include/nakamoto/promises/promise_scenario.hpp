#pragma once

#include <map>
#include <string>
#include <vector>

#include "nakamoto/promises/registry.hpp"

namespace nakamoto::promises {

/// Final promise of the service-for-payment exchange between provider P and
/// client Q inside group G:
///   base: to G, scope G, triggered by a transfer from the payer account
///   alt1: to Q, scope G, same trigger
///   alt2: to G, scope G, triggered by a transfer from an undisclosed account
///   alt3: to Q, scope G, triggered by any transfer of the price
enum class ScenarioVariant { base, alt1, alt2, alt3 };

std::string to_string(ScenarioVariant v);
ScenarioVariant scenario_variant_from_string(std::string_view s);

struct ScenarioReport {
  ScenarioVariant variant = ScenarioVariant::base;
  AgentSet population;
  AgentSet group;
  std::vector<std::pair<std::string, Status>> statuses;  // in declaration order
  std::map<Agent, AgentSet> payer_anonymity;             // per observer
  std::map<Agent, AgentSet> payee_anonymity;
  std::vector<Agent> served;
  bool condition_verified = false;
  std::uint64_t transfer_confirmations = 0;
  std::string status_stream;

  std::string json() const;
  friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

/// Runs the six declarations, the payment on a local chain, the condition
/// check and the delivery. `confirmations_required` is the count at which a
/// transfer is taken as made; the payment block is followed by enough empty
/// blocks to reach it.
ScenarioReport run_promise_scenario(ScenarioVariant variant, std::uint64_t confirmations_required = 1);

}  // namespace nakamoto::promises
