#pragma once

#include <map>
#include <string>
#include <vector>

#include "nakamoto/accounting/access.hpp"
#include "nakamoto/ledger/profile.hpp"
#include "nakamoto/ledger/state.hpp"
#include "nakamoto/numerics/quantity.hpp"

namespace nakamoto::accounting {

using numerics::Quantity;
using numerics::Rat;

/// q(a, t): amount accessible via each address, in money units.
using Holdings = std::map<Address, Rat>;

Holdings holdings_of(const ledger::LedgerState& state, const ledger::MoneyProfile& profile);

/// Value of q BGU in the unit of account: q BGUA. Any q is allowed,
/// including amounts beyond the circulation bound.
Quantity valuation(const Rat& q);
/// Same for a tagged amount; throws DimensionMismatch unless it is in BGU.
Quantity valuation(const Quantity& q);

/// Sum over addresses the agent can access of q(a)/(number of agents with
/// access to a), in BGUA.
Quantity wealth1(const Agent& agent, const Holdings& q, const AccessRelation& access);

/// wealth1 over the confirmed-access closure at t, in FBGUA.
Quantity wealth2(const Agent& agent, const Holdings& q, const Assertions& raw, const Time& t);

/// wealth1 / 100 converted at 1 FBGU per BGUA, in FBGU.
Quantity taxation(const Agent& agent, const Holdings& q, const AccessRelation& access);

struct WealthRow {
  Agent agent;
  Time time;
  Quantity value;
};

/// "agent,t,value,unit" rows with a header line.
std::string wealth_csv(const std::vector<WealthRow>& rows);

}  // namespace nakamoto::accounting
