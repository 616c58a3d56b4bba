#pragma once

#include <vector>

#include "nakamoto/promises/registry.hpp"

namespace nakamoto::extensions {

struct PolicyItem {
  promises::Policy::Kind kind = promises::Policy::Kind::other;
  std::optional<promises::Address> address;
  std::string text;
};

/// Publishes each item as a promise from `agent` to, and visible to, all
/// `participants` (the agent is added if missing).
std::vector<promises::Registry::Id> policy_announce(promises::Registry& reg, const promises::Agent& agent,
                                                    const std::vector<PolicyItem>& items,
                                                    promises::AgentSet participants,
                                                    const promises::Time& at = promises::Time(0));

/// Outputs of `t` that deserve a flag: the transfer comes from none of the
/// `known_sources`, and the receiving address has no published gift-account
/// policy.
std::vector<promises::Address> flag_anonymous_incoming(const promises::Registry& reg,
                                                       const promises::TransferObserved& t,
                                                       const std::set<promises::Address>& known_sources);

}  // namespace nakamoto::extensions
