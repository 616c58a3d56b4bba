#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include "nakamoto/ledger/types.hpp"
#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::promises {

using Agent = std::string;
using AgentSet = std::set<Agent>;
using ledger::Address;
using ledger::Amount;
using Time = numerics::Rat;

/// `amount` moves from `from` (any address when empty) to `to` by `deadline`.
struct Transfer {
  Amount amount;
  std::optional<Address> from;
  Address to;
  Time deadline;
};

/// Service `service` to at most `capacity` agents satisfying `condition`,
/// for `price`.
struct ProvideService {
  std::string service;
  std::uint64_t capacity = 1;
  std::string condition;
  Amount price;
};

/// Requests for `service` are served by `provider` in order of arrival.
struct ServeInOrder {
  std::string service;
  Agent provider;
};

/// Transfers into `address` are possible (the address exists and is live).
struct AcceptsTransfers {
  Address address;
};

struct SatisfiesCondition {
  std::string condition;
};

/// Explicit claim that the promiser controls `address`.
struct Controls {
  Address address;
};

/// A published usage policy. `address` is the account it concerns, if any.
struct Policy {
  enum class Kind { restitution, gift_account, publish_outgoing, other };
  Kind kind = Kind::other;
  std::optional<Address> address;
  std::string text;
};

/// Trigger of a conditional promise: an observed transfer of at least
/// `amount`, from `from` unless the account is not disclosed, into `to`
/// when given.
struct TransferTrigger {
  Amount amount;
  std::optional<Address> from;
  std::optional<Address> to;
};

/// Once the trigger fires, `service` is provided to the sender of the
/// transfer, provided the sender satisfies `condition` (when non-empty).
struct Conditional {
  TransferTrigger trigger;
  std::string condition;
  std::string service;
};

using Body = std::variant<Transfer, ProvideService, ServeInOrder, AcceptsTransfers, SatisfiesCondition, Controls,
                          Policy, Conditional>;

std::string body_kind(const Body& b);

enum class Status { declared, satisfied, expectation_lapsed };
std::string to_string(Status s);

struct Promise {
  Agent promiser;
  AgentSet promisees;
  AgentSet scope;
  Body body;
  std::string note;  // free text for reports
};

class MalformedScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nakamoto::promises
