#include "nakamoto/extensions/exchange.hpp"

#include <fstream>
#include <sstream>

namespace nakamoto::extensions {

using ledger::Amount;

std::string to_string(Direction d) { return d == Direction::to_near_money ? "to-near-money" : "to-money"; }

ExchangeMarket::ExchangeMarket(std::map<Time, Rat> path) : path_(std::move(path)) {
  if (path_.empty()) throw std::invalid_argument("rate path is empty");
  for (const auto& [t, r] : path_)
    if (r <= Rat(0)) throw std::invalid_argument("rate at " + t.str() + " must be positive");
}

ExchangeMarket ExchangeMarket::from_csv(std::istream& in) {
  std::map<Time, Rat> path;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("rate csv line " + std::to_string(lineno) + ": expected time,rate");
    auto trim = [](std::string x) {
      x.erase(0, x.find_first_not_of(" \t"));
      x.erase(x.find_last_not_of(" \t") + 1);
      return x;
    };
    std::string t = trim(line.substr(0, comma)), r = trim(line.substr(comma + 1));
    if (path.empty() && t == "time") continue;
    try {
      path[Rat::parse(t)] = Rat::parse(r);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("rate csv line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return ExchangeMarket(std::move(path));
}

ExchangeMarket ExchangeMarket::load_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open rate file " + file.string());
  return from_csv(in);
}

ExchangeMarket ExchangeMarket::random_walk(std::uint64_t seed, const Rat& start, std::size_t steps, const Time& step,
                                           const Rat& max_move) {
  crypto::Rng rng(seed);
  std::map<Time, Rat> path;
  Rat rate = start;
  auto hundredths = static_cast<std::uint64_t>((max_move * Rat(100)).floor());
  for (std::size_t i = 0; i <= steps; ++i) {
    path[step * Rat(static_cast<std::int64_t>(i))] = rate;
    auto k = static_cast<std::int64_t>(rng.uniform_int(0, 2 * hundredths)) - static_cast<std::int64_t>(hundredths);
    rate = rate * (Rat(1) + Rat(k, 100));
  }
  return ExchangeMarket(std::move(path));
}

Rat ExchangeMarket::rate_at(const Time& t) const {
  auto it = path_.upper_bound(t);
  if (it == path_.begin()) throw NoRate("no rate posted at or before " + t.str());
  return std::prev(it)->second;
}

Amount convert_amount(const Amount& source, const Rat& rate, Direction d, const ledger::MoneyProfile& money,
                      const ledger::MoneyProfile& near, Rat* dust) {
  const auto& from = d == Direction::to_near_money ? money : near;
  const auto& to = d == Direction::to_near_money ? near : money;
  Rat units = source.to_rat() * from.quantum;
  Rat target_units = d == Direction::to_near_money ? units * rate : units / rate;
  Rat whole(Rat(target_units / to.quantum).floor());
  if (dust) *dust = target_units - whole * to.quantum;
  return Amount::from_units(whole, Rat(1));
}

nlohmann::ordered_json Conversion::json() const {
  return {{"event", "exchange"},       {"time", time.str()},     {"agent", agent},
          {"direction", to_string(direction)}, {"source", source.str()}, {"target", target.str()},
          {"rate", rate.str()},        {"dust", dust.str()}};
}

DualSystem::DualSystem(ledger::MoneyProfile money, ledger::MoneyProfile near, ExchangeMarket market,
                       std::uint64_t seed)
    : money_(std::move(money)), near_(std::move(near)), market_(std::move(market)), rng_(seed) {
  add_agent(kDesk);
  add_agent(kMiner);
}

void DualSystem::add_agent(const std::string& name) {
  if (keys_.count(name)) return;
  Keys k{crypto::gen_keypair(rng_, money_.profile().scheme), crypto::gen_keypair(rng_, near_.profile().scheme)};
  keys_.emplace(name, k);
}

const crypto::KeyPair& DualSystem::money_key(const std::string& name) const {
  auto it = keys_.find(name);
  if (it == keys_.end()) throw std::out_of_range("unknown agent " + name);
  return it->second.money;
}

const crypto::KeyPair& DualSystem::near_key(const std::string& name) const {
  auto it = keys_.find(name);
  if (it == keys_.end()) throw std::out_of_range("unknown agent " + name);
  return it->second.near;
}

Amount DualSystem::money_balance(const std::string& name) const {
  return money_.state().balance(money_key(name).address);
}

Amount DualSystem::near_balance(const std::string& name) const {
  return near_.state().balance(near_key(name).address);
}

void DualSystem::mine_money_to(const std::string& name, std::size_t blocks) {
  for (std::size_t i = 0; i < blocks; ++i) money_.mine(money_key(name), {});
}

IssueEvent DualSystem::issue_near(const std::string& name, const Amount& amount, const std::string& rationale) {
  if (near_.size() == 0) near_.mine(near_key(kMiner), {});
  issues_.push_back(managed_issue(near_, near_key(name).address, {amount, true, rationale}));
  return issues_.back();
}

void DualSystem::transfer(ledger::LocalChain& chain, const crypto::KeyPair& from, const crypto::KeyPair& to,
                          const Amount& amount, const crypto::KeyPair& miner) {
  const auto& p = chain.profile();
  if (chain.size() == 0) chain.mine(miner, {});
  if (chain.state().balance(from.address) < amount + p.min_fee)
    throw InsufficientFunds(p.unit + " holding " + chain.state().balance(from.address).str() +
                           " does not cover " + (amount + p.min_fee).str());
  auto tx = ledger::make_transaction(from, {{to.address, amount}}, p.min_fee, ledger::random_nonce(rng_), p.scheme);
  chain.mine(miner, {tx});
}

void DualSystem::transfer_money(const std::string& from, const std::string& to, const Amount& amount) {
  transfer(money_, money_key(from), money_key(to), amount, money_key(kMiner));
}

void DualSystem::transfer_near(const std::string& from, const std::string& to, const Amount& amount) {
  transfer(near_, near_key(from), near_key(to), amount, near_key(kMiner));
}

Conversion DualSystem::exchange(const std::string& agent, const Amount& source, Direction d, const Time& time) {
  Rat rate = market_.rate_at(time);
  Conversion c{time, agent, d, source, {}, rate, {}};
  c.target = convert_amount(source, rate, d, money_.profile(), near_.profile(), &c.dust);
  auto& src = d == Direction::to_near_money ? money_ : near_;
  auto& dst = d == Direction::to_near_money ? near_ : money_;
  auto key = [&](const std::string& who, const ledger::LocalChain& chain) -> const crypto::KeyPair& {
    return &chain == &money_ ? money_key(who) : near_key(who);
  };
  // Check both legs before moving anything.
  if (src.state().balance(key(agent, src).address) < source + src.profile().min_fee)
    throw InsufficientFunds(agent + " cannot cover " + source.str() + " plus fee");
  if (dst.state().balance(key(kDesk, dst).address) < c.target + dst.profile().min_fee)
    throw InsufficientFunds("exchange desk cannot cover " + c.target.str() + " plus fee");
  transfer(src, key(agent, src), key(kDesk, src), source, key(kMiner, src));
  transfer(dst, key(kDesk, dst), key(agent, dst), c.target, key(kMiner, dst));
  conversions_.push_back(c);
  return c;
}

}  // namespace nakamoto::extensions
