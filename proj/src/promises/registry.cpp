#include "nakamoto/promises/registry.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace nakamoto::promises {

Time event_time(const Event& e) {
  return std::visit([](const auto& x) { return x.time; }, e);
}

Registry::Id Registry::declare(Promise p, Time at) {
  if (!p.scope.count(p.promiser)) throw MalformedScope("scope must contain the promiser " + p.promiser);
  if (p.promisees.empty()) throw MalformedScope("promise needs at least one promisee");
  if (auto* s = std::get_if<ProvideService>(&p.body); s && s->capacity == 0)
    throw MalformedScope("service capacity must be positive");
  Entry e;
  e.promise = std::move(p);
  e.declared_at = at;
  entries_.push_back(std::move(e));
  return entries_.size() - 1;
}

std::vector<Registry::Id> Registry::visible_to(const Agent& agent) const {
  std::vector<Id> out;
  for (Id i = 0; i < entries_.size(); ++i)
    if (visible(i, agent)) out.push_back(i);
  return out;
}

KnowledgeBase Registry::knowledge(const Agent& agent) const {
  KnowledgeBase kb{agent, {}, facts_};
  for (Id i : visible_to(agent)) kb.promises.push_back(entries_[i].promise);
  return kb;
}

void Registry::set(Id id, Status s, const Time& t, std::string reason) {
  Entry& e = entries_[id];
  if (e.status != Status::declared) return;
  e.status = s;
  changes_.push_back({t, id, s, std::move(reason)});
}

namespace {

bool pays(const TransferObserved& t, const std::optional<Address>& from, const std::optional<Address>& to,
          const Amount& amount) {
  if (from && std::find(t.from.begin(), t.from.end(), *from) == t.from.end()) return false;
  Amount into;
  for (const auto& o : t.to)
    if (!to || o.address == *to) into += o.amount;
  return into >= amount && (to || !t.to.empty());
}

}  // namespace

void Registry::observe(const Event& ev) {
  Time t = event_time(ev);
  if (t < now_) throw std::invalid_argument("events out of time order");
  now_ = t;

  // Deadlines first: a transfer after its deadline does not count.
  for (Id i = 0; i < entries_.size(); ++i) {
    if (auto* tr = std::get_if<Transfer>(&entries_[i].promise.body); tr && t > tr->deadline)
      set(i, Status::expectation_lapsed, t, "deadline passed");
  }

  if (auto* tx = std::get_if<TransferObserved>(&ev)) facts_.push_back(*tx);
  if (auto* a = std::get_if<Announcement>(&ev)) {
    ++announced_[a->from];
    return;
  }

  for (Id i = 0; i < entries_.size(); ++i) {
    Entry& e = entries_[i];
    const Promise& p = e.promise;
    if (e.status != Status::declared) continue;

    if (auto* tx = std::get_if<TransferObserved>(&ev)) {
      if (!settled(*tx)) continue;
      if (auto* tr = std::get_if<Transfer>(&p.body)) {
        if (pays(*tx, tr->from, tr->to, tr->amount)) set(i, Status::satisfied, t, "matching transfer confirmed");
      } else if (auto* acc = std::get_if<AcceptsTransfers>(&p.body)) {
        if (pays(*tx, std::nullopt, acc->address, Amount{})) set(i, Status::satisfied, t, "transfer received");
      } else if (auto* c = std::get_if<Conditional>(&p.body)) {
        if (!e.armed && pays(*tx, c->trigger.from, c->trigger.to, c->trigger.amount)) e.armed = true;
      } else if (auto* pol = std::get_if<Policy>(&p.body);
                 pol && pol->kind == Policy::Kind::publish_outgoing && pol->address) {
        bool outgoing = std::find(tx->from.begin(), tx->from.end(), *pol->address) != tx->from.end();
        if (outgoing && counted_outgoing_.insert(tx->tx).second) {
          if (announced_[*pol->address] > 0) --announced_[*pol->address];
          else set(i, Status::expectation_lapsed, t, "not kept: outgoing transfer without notice");
        }
      }
    } else if (auto* req = std::get_if<ServiceRequested>(&ev)) {
      if (auto* order = std::get_if<ServeInOrder>(&p.body); order && order->service == req->service)
        e.queue.push_back(req->agent);
    } else if (auto* del = std::get_if<ServiceDelivered>(&ev)) {
      if (auto* svc = std::get_if<ProvideService>(&p.body)) {
        if (svc->service == del->service && p.promiser == del->provider)
          set(i, Status::satisfied, t, "service delivered to " + del->agent);
      } else if (auto* order = std::get_if<ServeInOrder>(&p.body)) {
        if (order->service != del->service || order->provider != del->provider) continue;
        if (!e.queue.empty() && e.queue.front() == del->agent) {
          e.queue.pop_front();
          set(i, Status::satisfied, t, "served in order of arrival");
        } else {
          set(i, Status::expectation_lapsed, t, "not kept: served out of order");
        }
      } else if (auto* c = std::get_if<Conditional>(&p.body)) {
        if (e.armed && c->service == del->service && p.promiser == del->provider)
          set(i, Status::satisfied, t, "service delivered to " + del->agent);
      }
    } else if (auto* cv = std::get_if<ConditionVerified>(&ev)) {
      if (auto* sc = std::get_if<SatisfiesCondition>(&p.body); sc && sc->condition == cv->condition &&
                                                               p.promiser == cv->agent)
        set(i, cv->holds ? Status::satisfied : Status::expectation_lapsed, t,
            cv->holds ? "condition verified" : "condition does not hold");
    }
  }
}

std::string Registry::status_json_lines() const {
  std::string out;
  for (const auto& c : changes_) {
    nlohmann::ordered_json j;
    j["event"] = "promise-status";
    j["time"] = c.time.str();
    j["id"] = c.id;
    j["promiser"] = entries_[c.id].promise.promiser;
    j["kind"] = body_kind(entries_[c.id].promise.body);
    j["status"] = to_string(c.status);
    j["reason"] = c.reason;
    out += j.dump() + "\n";
  }
  return out;
}

std::optional<Agent> ServiceQueue::next() {
  if (waiting_.empty() || served_.size() >= capacity_) return std::nullopt;
  Agent a = waiting_.front();
  waiting_.pop_front();
  served_.push_back(a);
  return a;
}

}  // namespace nakamoto::promises
