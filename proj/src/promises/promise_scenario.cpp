#include "nakamoto/promises/promise_scenario.hpp"

#include <nlohmann/json.hpp>

#include "nakamoto/crypto/rng.hpp"
#include "nakamoto/ledger/local_chain.hpp"
#include "nakamoto/promises/anonymity.hpp"

namespace nakamoto::promises {

std::string to_string(ScenarioVariant v) {
  switch (v) {
    case ScenarioVariant::base: return "base";
    case ScenarioVariant::alt1: return "alt1";
    case ScenarioVariant::alt2: return "alt2";
    case ScenarioVariant::alt3: return "alt3";
  }
  return "?";
}

ScenarioVariant scenario_variant_from_string(std::string_view s) {
  for (auto v : {ScenarioVariant::base, ScenarioVariant::alt1, ScenarioVariant::alt2, ScenarioVariant::alt3})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown scenario variant '" + std::string(s) + "'");
}

std::string ScenarioReport::json() const {
  auto set_json = [](const AgentSet& s) { return nlohmann::ordered_json(std::vector<Agent>(s.begin(), s.end())); };
  nlohmann::ordered_json j;
  j["variant"] = to_string(variant);
  j["population"] = set_json(population);
  j["group"] = set_json(group);
  for (const auto& [label, st] : statuses) j["statuses"][label] = to_string(st);
  for (const auto& [who, s] : payer_anonymity) j["payer_anonymity"][who] = set_json(s);
  for (const auto& [who, s] : payee_anonymity) j["payee_anonymity"][who] = set_json(s);
  j["served"] = served;
  j["condition_verified"] = condition_verified;
  j["transfer_confirmations"] = transfer_confirmations;
  return j.dump();
}

ScenarioReport run_promise_scenario(ScenarioVariant variant, std::uint64_t confirmations_required) {
  const Agent P = "P", Q = "Q";
  const AgentSet population{P, Q, "R1", "R2", "S1", "S2"};
  const AgentSet group{P, Q, "R1", "R2"};
  const std::string service = "s", gamma = "gamma";
  const std::map<Agent, bool> gamma_holds{{Q, true}};
  const std::uint64_t capacity = 1;

  ledger::LocalChain chain(ledger::MoneyProfile::desk());
  const auto scheme = chain.profile().scheme;
  crypto::Rng rng(0);
  crypto::KeyPair payee = crypto::gen_keypair(rng, scheme);  // P's receiving account
  crypto::KeyPair payer = crypto::gen_keypair(rng, scheme);  // Q's paying account
  crypto::KeyPair miner = crypto::gen_keypair(rng, scheme);
  const Amount price = Amount::from_units(numerics::Rat(5), chain.profile().quantum);
  chain.mine(payer, {});

  Registry reg(confirmations_required);
  std::vector<std::string> labels;
  Time now(0);
  auto declare = [&](std::string label, Promise p) {
    reg.declare(std::move(p), now);
    labels.push_back(std::move(label));
    now += 1;
  };
  declare("1 provide-service", {P, group, group, ProvideService{service, capacity, gamma, price}, ""});
  declare("2 serve-in-order", {Q, group, group, ServeInOrder{service, P}, ""});
  declare("3 accepts-transfers", {Q, group, group, AcceptsTransfers{payee.address}, ""});
  // Private to P; the promiser always belongs to its own audience.
  const AgentSet private_scope{P, Q};
  declare("4 satisfies-condition", {Q, {P}, private_scope, SatisfiesCondition{gamma}, ""});
  declare("5 transfer", {Q, {P}, private_scope, Transfer{price, payer.address, payee.address, Time(100)}, ""});

  TransferTrigger trigger{price, payer.address, payee.address};
  AgentSet final_promisees = group;
  switch (variant) {
    case ScenarioVariant::base: break;
    case ScenarioVariant::alt1: final_promisees = {Q}; break;
    case ScenarioVariant::alt2: trigger.from.reset(); break;
    case ScenarioVariant::alt3:
      final_promisees = {Q};
      trigger.from.reset();
      break;
  }
  declare("6 conditional-service", {P, final_promisees, group, Conditional{trigger, gamma, service}, ""});

  ServiceQueue desk(capacity);
  reg.observe(ServiceRequested{now, Q, service});
  desk.request(Q);
  now += 1;

  ledger::Transaction pay = ledger::make_transaction(payer, {{payee.address, price}}, Amount(1),
                                                     ledger::random_nonce(rng), scheme);
  chain.mine(miner, {pay});
  std::uint64_t paid_at = *chain.state().tx_height(ledger::tx_id(pay));
  auto confirmations = [&] { return chain.state().height() - paid_at + 1; };
  while (confirmations() < confirmations_required) chain.mine(miner, {});
  reg.observe(TransferObserved{now, ledger::tx_id(pay), {payer.address}, pay.outputs, confirmations()});
  now += 1;

  ScenarioReport report;
  report.variant = variant;
  report.population = population;
  report.group = group;
  report.transfer_confirmations = confirmations();
  report.condition_verified = gamma_holds.at(Q);
  reg.observe(ConditionVerified{now, Q, gamma, report.condition_verified});
  now += 1;

  // P only delivers once it has seen the payment and the condition holds.
  std::size_t conditional_id = labels.size() - 1;
  if (reg.armed(conditional_id) && report.condition_verified) {
    while (auto next = desk.next()) {
      reg.observe(ServiceDelivered{now, P, *next, service});
      report.served.push_back(*next);
    }
  }

  for (std::size_t i = 0; i < labels.size(); ++i) report.statuses.emplace_back(labels[i], reg.status(i));
  const std::map<Agent, std::set<Address>> own{{P, {payee.address}}, {Q, {payer.address}}};
  for (const auto& who : population) {
    auto kb = reg.knowledge(who);
    auto mine = own.count(who) ? own.at(who) : std::set<Address>{};
    report.payer_anonymity[who] = anonymity_set(kb, payer.address, population, mine);
    report.payee_anonymity[who] = anonymity_set(kb, payee.address, population, mine);
  }
  report.status_stream = reg.status_json_lines();
  return report;
}

}  // namespace nakamoto::promises
