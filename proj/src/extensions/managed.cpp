#include "nakamoto/extensions/managed.hpp"

namespace nakamoto::extensions {

ledger::Amount supply(const ledger::LedgerState& s) {
  return s.minted_total() + s.issued_total() - s.destroyed_total();
}

nlohmann::ordered_json IssueEvent::json() const {
  return {{"event", "managed-issue"},
          {"height", height},
          {"treasury", treasury.hex()},
          {"direction", decision.increase ? "increase" : "decrease"},
          {"amount", decision.amount.str()},
          {"supply", supply_after.str()},
          {"rationale", decision.rationale}};
}

IssueEvent managed_issue(ledger::LocalChain& chain, const ledger::Address& treasury, const IssueDecision& d) {
  chain.adjust_supply(treasury, d.amount, d.increase);
  return {chain.state().height(), treasury, d, supply(chain.state())};
}

std::vector<IssueEvent> run_issuance_path(ledger::LocalChain& chain, const crypto::KeyPair& miner,
                                          const ledger::Address& treasury, const std::vector<IssueDecision>& path) {
  std::vector<IssueEvent> out;
  for (const auto& d : path) {
    chain.mine(miner, {});
    out.push_back(managed_issue(chain, treasury, d));
  }
  return out;
}

}  // namespace nakamoto::extensions
