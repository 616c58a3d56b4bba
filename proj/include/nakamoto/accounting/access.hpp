#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nakamoto/crypto/signer.hpp"
#include "nakamoto/ledger/types.hpp"
#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::accounting {

using Agent = std::string;
using ledger::Address;
using Time = numerics::Rat;

enum class Provenance { self_asserted, demonstrated, shared_assertion };
std::string to_string(Provenance p);

/// Which agents have access to which addresses at one time point, with the
/// reason each pair was admitted.
class AccessRelation {
 public:
  void add(const Agent& agent, const Address& address, Provenance why, const Agent& asserted_by = {});

  bool has(const Agent& agent, const Address& address) const;
  /// Number of agents with access to `address`.
  std::size_t holders(const Address& address) const;
  std::vector<Address> addresses_of(const Agent& agent) const;
  std::set<Agent> agents() const;
  std::set<Address> addresses() const;
  /// First recorded reason for the pair; throws std::out_of_range if absent.
  Provenance provenance(const Agent& agent, const Address& address) const;

  /// Same pairs; the recorded reasons are not compared.
  friend bool operator==(const AccessRelation& a, const AccessRelation& b) {
    return a.subset_of(b) && b.subset_of(a);
  }
  /// Every pair of this relation is also in `other`.
  bool subset_of(const AccessRelation& other) const;

 private:
  struct Why {
    Provenance provenance;
    Agent asserted_by;
  };
  std::map<std::pair<Address, Agent>, Why> pairs_;
};

/// Agent states, on request of an external examiner, that it had access.
struct Confirmation {
  Agent agent;
  Address address;
  Time time;
};

/// Proof of access: a signature over an examiner's challenge that verifies
/// against the address.
struct Demonstration {
  Agent agent;
  Address address;
  Time time;
  crypto::Bytes challenge;
  crypto::Signature signature;
  crypto::SignatureScheme scheme = crypto::SignatureScheme::ed25519;

  bool valid() const;
};

Demonstration demonstrate(const Agent& agent, const crypto::KeyPair& key, crypto::Bytes challenge, const Time& time,
                          crypto::SignatureScheme scheme);

/// `asserter` states that it shared access to `address` with `with`.
struct SharingAssertion {
  Agent asserter;
  Agent with;
  Address address;
  Time time;
};

struct Assertions {
  std::vector<Confirmation> confirmations;
  std::vector<Demonstration> demonstrations;
  std::vector<SharingAssertion> sharing;
};

/// Confirmed access before `t`: least relation containing every agent that
/// both confirmed and validly demonstrated access to an address before t,
/// and closed under sharing assertions made before t by agents already in
/// the relation for that address.
AccessRelation c_access_closure(const Assertions& raw, const Time& t);

}  // namespace nakamoto::accounting
