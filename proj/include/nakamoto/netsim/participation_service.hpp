#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "nakamoto/ledger/types.hpp"

namespace nakamoto::netsim {

using ledger::Amount;

class InsolventService : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownClaimant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientClaim : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// On-chain payment a withdrawal or external transfer asks the service to make.
struct ServicePayout {
  ledger::Entry output;  // amount already net of the fee
  Amount fee;
};

/// Claims ledger of a service that holds coin for indirect users. Every
/// operation takes the service's current on-chain holdings and refuses to
/// leave claims larger than them.
class ParticipationService {
 public:
  explicit ParticipationService(std::string id) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  void add_user(const std::string& user) { claims_.emplace(user, Amount()); }
  bool has_user(const std::string& user) const { return claims_.count(user) != 0; }

  /// Credits a claim for coin the service already holds.
  void deposit(const std::string& user, const Amount& amount, const Amount& onchain);
  /// Moves claims between two users; nothing goes on-chain.
  void transfer(const std::string& from, const std::string& to, const Amount& amount, const Amount& onchain);
  /// Debits `amount` from the claim; the payout carries amount - fee.
  ServicePayout withdraw(const std::string& user, const Amount& amount, const ledger::Address& to, const Amount& fee,
                         const Amount& onchain);

  Amount claim(const std::string& user) const;
  Amount total_claims() const;
  const std::map<std::string, Amount>& claims() const { return claims_; }
  bool solvent(const Amount& onchain) const { return total_claims() <= onchain; }
  /// Throws InsolventService when claims exceed the holdings.
  void check(const Amount& onchain) const;

 private:
  Amount& entry(const std::string& user);

  std::string id_;
  std::map<std::string, Amount> claims_;
};

}  // namespace nakamoto::netsim
