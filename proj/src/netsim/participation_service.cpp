#include "nakamoto/netsim/participation_service.hpp"

namespace nakamoto::netsim {

Amount& ParticipationService::entry(const std::string& user) {
  auto it = claims_.find(user);
  if (it == claims_.end()) throw UnknownClaimant(id_ + ": unknown claimant '" + user + "'");
  return it->second;
}

Amount ParticipationService::claim(const std::string& user) const {
  auto it = claims_.find(user);
  if (it == claims_.end()) throw UnknownClaimant(id_ + ": unknown claimant '" + user + "'");
  return it->second;
}

Amount ParticipationService::total_claims() const {
  Amount t;
  for (const auto& [u, a] : claims_) t += a;
  return t;
}

void ParticipationService::check(const Amount& onchain) const {
  if (!solvent(onchain))
    throw InsolventService(id_ + ": claims " + total_claims().str() + " exceed holdings " + onchain.str());
}

void ParticipationService::deposit(const std::string& user, const Amount& amount, const Amount& onchain) {
  Amount& c = entry(user);
  if (total_claims() + amount > onchain)
    throw InsolventService(id_ + ": deposit of " + amount.str() + " is not backed by holdings " + onchain.str());
  c += amount;
}

void ParticipationService::transfer(const std::string& from, const std::string& to, const Amount& amount,
                                    const Amount& onchain) {
  Amount& a = entry(from);
  Amount& b = entry(to);
  if (a < amount) throw InsufficientClaim(id_ + ": claim of '" + from + "' is below " + amount.str());
  a -= amount;
  b += amount;
  check(onchain);
}

ServicePayout ParticipationService::withdraw(const std::string& user, const Amount& amount, const ledger::Address& to,
                                             const Amount& fee, const Amount& onchain) {
  Amount& c = entry(user);
  if (c < amount) throw InsufficientClaim(id_ + ": claim of '" + user + "' is below " + amount.str());
  if (amount <= fee) throw InsufficientClaim(id_ + ": amount does not cover the fee");
  check(onchain);
  c -= amount;
  return {ledger::Entry{to, amount - fee}, fee};
}

}  // namespace nakamoto::netsim
