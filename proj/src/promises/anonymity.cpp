#include "nakamoto/promises/anonymity.hpp"

#include <algorithm>
#include <iterator>

namespace nakamoto::promises {

namespace {

std::optional<AgentSet> constraint(const Promise& p, const Address& a) {
  AgentSet self{p.promiser};
  return std::visit(
      [&](const auto& b) -> std::optional<AgentSet> {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, Transfer>) {
          if (b.from == a) return self;
        } else if constexpr (std::is_same_v<B, Controls>) {
          if (b.address == a) return self;
        } else if constexpr (std::is_same_v<B, Policy>) {
          if (b.address == a) return self;
        } else if constexpr (std::is_same_v<B, AcceptsTransfers>) {
          if (b.address == a) {
            AgentSet s = p.promisees;
            s.insert(p.promiser);
            return s;
          }
        } else if constexpr (std::is_same_v<B, Conditional>) {
          if (b.trigger.from == a) return p.promisees;
        }
        return std::nullopt;
      },
      p.body);
}

}  // namespace

AgentSet anonymity_set(const KnowledgeBase& kb, const Address& address, const AgentSet& population,
                       const std::set<Address>& own_addresses) {
  if (own_addresses.count(address)) return population.count(kb.agent) ? AgentSet{kb.agent} : AgentSet{};
  AgentSet out = population;
  for (const auto& p : kb.promises) {
    auto c = constraint(p, address);
    if (!c) continue;
    AgentSet next;
    std::set_intersection(out.begin(), out.end(), c->begin(), c->end(), std::inserter(next, next.end()));
    out = std::move(next);
  }
  return out;
}

}  // namespace nakamoto::promises
