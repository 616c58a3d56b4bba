#pragma once

#include "nakamoto/promises/registry.hpp"

namespace nakamoto::promises {

/// Agents that `kb.agent` cannot rule out as controller of `address`.
///
/// Starts from `population` and intersects with every constraint implied by
/// a visible promise:
///   transfer from the address, control claim, or policy on it -> {promiser}
///   accepts-transfers into the address -> promisees and promiser
///   conditional triggered by a transfer from the address -> promisees
/// An observer's own addresses resolve to the observer. More visible
/// promises can only shrink the result.
AgentSet anonymity_set(const KnowledgeBase& kb, const Address& address, const AgentSet& population,
                       const std::set<Address>& own_addresses = {});

}  // namespace nakamoto::promises
