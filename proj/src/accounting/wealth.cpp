#include "nakamoto/accounting/wealth.hpp"

#include <sstream>

namespace nakamoto::accounting {

using numerics::Dimension;

Holdings holdings_of(const ledger::LedgerState& state, const ledger::MoneyProfile& profile) {
  Holdings out;
  for (const auto& [a, v] : state.balances()) out[a] = v.to_rat() * profile.quantum;
  return out;
}

Quantity valuation(const Rat& q) { return {q, "BGUA"}; }

Quantity valuation(const Quantity& q) {
  if (q.dim != Dimension("BGU")) throw numerics::DimensionMismatch(Dimension("BGU"), q.dim);
  return valuation(q.value);
}

namespace {

Rat shared_sum(const Agent& agent, const Holdings& q, const AccessRelation& access) {
  Rat sum;
  for (const auto& a : access.addresses_of(agent)) {
    auto it = q.find(a);
    if (it == q.end()) continue;
    // The agent itself is one of the holders, so the divisor is at least 1.
    sum += it->second / Rat(static_cast<std::int64_t>(access.holders(a)));
  }
  return sum;
}

}  // namespace

Quantity wealth1(const Agent& agent, const Holdings& q, const AccessRelation& access) {
  return {shared_sum(agent, q, access), "BGUA"};
}

Quantity wealth2(const Agent& agent, const Holdings& q, const Assertions& raw, const Time& t) {
  return {shared_sum(agent, q, c_access_closure(raw, t)), "FBGUA"};
}

Quantity taxation(const Agent& agent, const Holdings& q, const AccessRelation& access) {
  return Quantity(Rat(1, 100)) * wealth1(agent, q, access) * Quantity(1, "FBGU/BGUA");
}

std::string wealth_csv(const std::vector<WealthRow>& rows) {
  std::ostringstream out;
  out << "agent,t,value,unit\n";
  for (const auto& r : rows) out << r.agent << ',' << r.time.str() << ',' << r.value.value.str() << ',' << r.value.dim.str() << '\n';
  return out.str();
}

}  // namespace nakamoto::accounting
