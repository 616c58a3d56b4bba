#pragma once

#include <deque>
#include <map>
#include <vector>

#include "nakamoto/promises/promise.hpp"

namespace nakamoto::promises {

/// A confirmed-or-not transfer seen on the chain. Chain facts are public.
struct TransferObserved {
  Time time;
  ledger::TxId tx;
  std::vector<Address> from;
  std::vector<ledger::Entry> to;
  std::uint64_t confirmations = 0;
};
struct ServiceRequested {
  Time time;
  Agent agent;
  std::string service;
};
struct ServiceDelivered {
  Time time;
  Agent provider;
  Agent agent;
  std::string service;
};
struct ConditionVerified {
  Time time;
  Agent agent;
  std::string condition;
  bool holds = false;
};
/// Prior public notice of an outgoing transfer from `from`.
struct Announcement {
  Time time;
  Agent agent;
  Address from;
};
struct Clock {
  Time time;
};

using Event = std::variant<TransferObserved, ServiceRequested, ServiceDelivered, ConditionVerified, Announcement, Clock>;

Time event_time(const Event& e);

/// What one agent knows: the promises whose scope includes it and the
/// public chain facts observed so far.
struct KnowledgeBase {
  Agent agent;
  std::vector<Promise> promises;
  std::vector<TransferObserved> facts;
};

/// Promise store with scoped visibility and status tracking. Statuses only
/// move from declared to satisfied or expectation-lapsed, driven by observed
/// events. Nothing here can perform a promised act or touch a balance: a
/// lapsed expectation is recorded and that is all.
class Registry {
 public:
  using Id = std::size_t;

  struct Change {
    Time time;
    Id id;
    Status status;
    std::string reason;
  };

  /// Transfers count once they have this many confirmations.
  explicit Registry(std::uint64_t confirmations_required = 1) : k_c_(confirmations_required) {}

  /// Throws MalformedScope when the promiser is outside the scope or the
  /// promisee set is empty.
  Id declare(Promise p, Time at = Time(0));

  std::size_t size() const { return entries_.size(); }
  const Promise& promise(Id id) const { return entries_.at(id).promise; }
  Status status(Id id) const { return entries_.at(id).status; }
  bool armed(Id id) const { return entries_.at(id).armed; }
  Time declared_at(Id id) const { return entries_.at(id).declared_at; }

  bool visible(Id id, const Agent& agent) const { return promise(id).scope.count(agent) != 0; }
  std::vector<Id> visible_to(const Agent& agent) const;
  KnowledgeBase knowledge(const Agent& agent) const;

  /// Events must arrive in nondecreasing time order.
  void observe(const Event& e);

  const std::vector<Change>& changes() const { return changes_; }
  /// One JSON object per status change.
  std::string status_json_lines() const;

 private:
  struct Entry {
    Promise promise;
    Status status = Status::declared;
    Time declared_at;
    bool armed = false;
    std::deque<Agent> queue;  // serve-in-order
  };

  void set(Id id, Status s, const Time& t, std::string reason);
  bool settled(const TransferObserved& t) const { return t.confirmations >= k_c_; }

  std::uint64_t k_c_;
  std::vector<Entry> entries_;
  std::vector<Change> changes_;
  std::vector<TransferObserved> facts_;
  std::map<Address, int> announced_;
  std::set<ledger::TxId> counted_outgoing_;
  Time now_;
};

/// First-come first-served service desk with a capacity bound.
class ServiceQueue {
 public:
  explicit ServiceQueue(std::uint64_t capacity) : capacity_(capacity) {}

  void request(const Agent& a) { waiting_.push_back(a); }
  /// Next agent to serve, or empty when capacity is spent or nobody waits.
  std::optional<Agent> next();
  std::uint64_t remaining() const { return capacity_ - served_.size(); }
  const std::vector<Agent>& served() const { return served_; }
  std::vector<Agent> unserved() const { return {waiting_.begin(), waiting_.end()}; }

 private:
  std::uint64_t capacity_;
  std::deque<Agent> waiting_;
  std::vector<Agent> served_;
};

}  // namespace nakamoto::promises
