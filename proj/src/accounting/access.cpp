#include "nakamoto/accounting/access.hpp"

namespace nakamoto::accounting {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::self_asserted: return "self-asserted";
    case Provenance::demonstrated: return "demonstrated";
    case Provenance::shared_assertion: return "shared-assertion";
  }
  return "?";
}

void AccessRelation::add(const Agent& agent, const Address& address, Provenance why, const Agent& asserted_by) {
  pairs_.emplace(std::make_pair(address, agent), Why{why, asserted_by});
}

bool AccessRelation::has(const Agent& agent, const Address& address) const {
  return pairs_.count({address, agent}) != 0;
}

std::size_t AccessRelation::holders(const Address& address) const {
  std::size_t n = 0;
  for (auto it = pairs_.lower_bound({address, Agent{}}); it != pairs_.end() && it->first.first == address; ++it) ++n;
  return n;
}

std::vector<Address> AccessRelation::addresses_of(const Agent& agent) const {
  std::vector<Address> out;
  for (const auto& [key, why] : pairs_)
    if (key.second == agent) out.push_back(key.first);
  return out;
}

std::set<Agent> AccessRelation::agents() const {
  std::set<Agent> out;
  for (const auto& [key, why] : pairs_) out.insert(key.second);
  return out;
}

std::set<Address> AccessRelation::addresses() const {
  std::set<Address> out;
  for (const auto& [key, why] : pairs_) out.insert(key.first);
  return out;
}

Provenance AccessRelation::provenance(const Agent& agent, const Address& address) const {
  return pairs_.at({address, agent}).provenance;
}

bool AccessRelation::subset_of(const AccessRelation& other) const {
  for (const auto& [key, why] : pairs_)
    if (!other.pairs_.count(key)) return false;
  return true;
}

bool Demonstration::valid() const {
  try {
    return crypto::signer_for(scheme).verify(address, challenge, signature);
  } catch (const crypto::CryptoError&) {
    return false;
  }
}

Demonstration demonstrate(const Agent& agent, const crypto::KeyPair& key, crypto::Bytes challenge, const Time& time,
                          crypto::SignatureScheme scheme) {
  Demonstration d{agent, key.address, time, std::move(challenge), {}, scheme};
  d.signature = crypto::signer_for(scheme).sign(key.secret, d.challenge);
  return d;
}

AccessRelation c_access_closure(const Assertions& raw, const Time& t) {
  AccessRelation rel;
  std::set<std::pair<Agent, Address>> confirmed, demonstrated;
  for (const auto& c : raw.confirmations)
    if (c.time < t) confirmed.insert({c.agent, c.address});
  for (const auto& d : raw.demonstrations)
    if (d.time < t && d.valid()) demonstrated.insert({d.agent, d.address});
  for (const auto& pair : confirmed)
    if (demonstrated.count(pair)) rel.add(pair.first, pair.second, Provenance::demonstrated);

  // Sharing clause to a fixpoint; each round admits at least one new pair.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : raw.sharing) {
      if (s.time >= t || rel.has(s.with, s.address) || !rel.has(s.asserter, s.address)) continue;
      rel.add(s.with, s.address, Provenance::shared_assertion, s.asserter);
      grew = true;
    }
  }
  return rel;
}

}  // namespace nakamoto::accounting
