#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nakamoto/ledger/local_chain.hpp"

namespace nakamoto::extensions {

/// Coins in existence: minted + issued - destroyed.
ledger::Amount supply(const ledger::LedgerState& s);

struct IssueDecision {
  ledger::Amount amount;
  bool increase = true;
  std::string rationale;
};

struct IssueEvent {
  std::uint64_t height = 0;
  ledger::Address treasury;
  IssueDecision decision;
  ledger::Amount supply_after;

  nlohmann::ordered_json json() const;
};

/// Applies one governor decision to the chain's current state. Throws
/// ledger::ProfileForbids on an exim profile and ledger::NegativeSupply when
/// a decrease exceeds the treasury holding.
IssueEvent managed_issue(ledger::LocalChain& chain, const ledger::Address& treasury, const IssueDecision& d);

/// Applies each decision after mining one empty block with `miner`; the
/// returned events trace the supply curve.
std::vector<IssueEvent> run_issuance_path(ledger::LocalChain& chain, const crypto::KeyPair& miner,
                                          const ledger::Address& treasury, const std::vector<IssueDecision>& path);

}  // namespace nakamoto::extensions
