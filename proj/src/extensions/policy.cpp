#include "nakamoto/extensions/policy.hpp"

#include <algorithm>

namespace nakamoto::extensions {

using namespace promises;

std::vector<Registry::Id> policy_announce(Registry& reg, const Agent& agent, const std::vector<PolicyItem>& items,
                                          AgentSet participants, const Time& at) {
  participants.insert(agent);
  std::vector<Registry::Id> ids;
  for (const auto& item : items)
    ids.push_back(reg.declare({agent, participants, participants, Policy{item.kind, item.address, item.text}, ""}, at));
  return ids;
}

std::vector<Address> flag_anonymous_incoming(const Registry& reg, const TransferObserved& t,
                                             const std::set<Address>& known_sources) {
  bool anonymous = std::none_of(t.from.begin(), t.from.end(), [&](const Address& a) { return known_sources.count(a); });
  std::vector<Address> flagged;
  if (!anonymous) return flagged;
  for (const auto& out : t.to) {
    bool gift = false;
    for (Registry::Id i = 0; i < reg.size() && !gift; ++i) {
      const auto* p = std::get_if<Policy>(&reg.promise(i).body);
      gift = p && p->kind == Policy::Kind::gift_account && p->address == out.address;
    }
    if (!gift && std::find(flagged.begin(), flagged.end(), out.address) == flagged.end()) flagged.push_back(out.address);
  }
  return flagged;
}

}  // namespace nakamoto::extensions
