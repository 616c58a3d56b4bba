#include "nakamoto/netsim/participant.hpp"

namespace nakamoto::netsim {

std::vector<ledger::Transaction> PlacementRole::candidates(const ledger::LedgerState& state,
                                                           const ledger::MoneyProfile& profile,
                                                           std::size_t limit) const {
  std::vector<ledger::Transaction> out;
  std::set<ledger::Address> debited;
  for (const auto& tx : pool_) {
    if (out.size() >= limit) break;
    if (state.nonce_seen(tx.nonce)) continue;
    if (ledger::validate_transaction(state, tx, profile)) continue;
    bool clash = false;
    for (const auto& in : tx.inputs) clash = clash || debited.count(in.address);
    if (clash) continue;
    for (const auto& in : tx.inputs) debited.insert(in.address);
    out.push_back(tx);
  }
  return out;
}

}  // namespace nakamoto::netsim
