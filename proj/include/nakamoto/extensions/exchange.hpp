#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nakamoto/crypto/rng.hpp"
#include "nakamoto/extensions/managed.hpp"
#include "nakamoto/ledger/local_chain.hpp"

namespace nakamoto::extensions {

using numerics::Rat;
using Time = numerics::Rat;

class NoRate : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InsufficientFunds : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// money -> near-money multiplies by the rate; the reverse divides.
enum class Direction { to_near_money, to_money };
std::string to_string(Direction d);

/// Exogenous exchange rate (near-money units per money unit) as a step
/// function of time: the rate at t is the last posted rate at or before t.
class ExchangeMarket {
 public:
  /// Throws std::invalid_argument on an empty path or a rate <= 0.
  explicit ExchangeMarket(std::map<Time, Rat> path);

  /// Lines "time,rate" with an optional header; '#' starts a comment.
  static ExchangeMarket from_csv(std::istream& in);
  static ExchangeMarket load_csv(const std::filesystem::path& file);
  /// Multiplicative walk: each step moves the rate by a factor drawn
  /// uniformly from {1 - max_move, ..., 1 + max_move} in hundredths.
  static ExchangeMarket random_walk(std::uint64_t seed, const Rat& start, std::size_t steps, const Time& step,
                                    const Rat& max_move);

  /// Throws NoRate before the first posted time.
  Rat rate_at(const Time& t) const;
  const std::map<Time, Rat>& path() const { return path_; }

 private:
  std::map<Time, Rat> path_;
};

/// Target amount of a conversion, floored to whole target quanta. `dust`
/// receives the value (in target units) lost to flooring.
ledger::Amount convert_amount(const ledger::Amount& source, const Rat& rate, Direction d,
                              const ledger::MoneyProfile& money, const ledger::MoneyProfile& near, Rat* dust = nullptr);

struct Conversion {
  Time time;
  std::string agent;
  Direction direction = Direction::to_near_money;
  ledger::Amount source;
  ledger::Amount target;
  Rat rate;
  Rat dust;  // target units

  nlohmann::ordered_json json() const;
};

/// An exim money and a managed near-money as two instances of the ledger
/// engine, with an exchange desk holding reserves on both. Every balance
/// change of a participant is a signed transaction mined into a block; the
/// desk's near-money reserve comes from governor issuance.
class DualSystem {
 public:
  static constexpr const char* kDesk = "exchange";
  static constexpr const char* kMiner = "miner";

  DualSystem(ledger::MoneyProfile money, ledger::MoneyProfile near, ExchangeMarket market, std::uint64_t seed = 0);

  void add_agent(const std::string& name);
  bool has_agent(const std::string& name) const { return keys_.count(name) != 0; }
  const crypto::KeyPair& money_key(const std::string& name) const;
  const crypto::KeyPair& near_key(const std::string& name) const;

  ledger::LocalChain& money() { return money_; }
  ledger::LocalChain& near() { return near_; }
  const ledger::LocalChain& money() const { return money_; }
  const ledger::LocalChain& near() const { return near_; }
  const ExchangeMarket& market() const { return market_; }

  ledger::Amount money_balance(const std::string& name) const;
  ledger::Amount near_balance(const std::string& name) const;

  /// Mines `blocks` money blocks whose reward goes to `name`.
  void mine_money_to(const std::string& name, std::size_t blocks);
  /// Governor issuance into `name`'s near-money account.
  IssueEvent issue_near(const std::string& name, const ledger::Amount& amount, const std::string& rationale);

  /// Signed transfer paid by `from` (plus the minimum fee), mined at once.
  void transfer_money(const std::string& from, const std::string& to, const ledger::Amount& amount);
  void transfer_near(const std::string& from, const std::string& to, const ledger::Amount& amount);

  /// Converts `source` of the agent's holding through the desk at the rate
  /// posted at `time`. Throws NoRate, or InsufficientFunds when the agent
  /// (or the desk) cannot cover the transfer plus fee.
  Conversion exchange(const std::string& agent, const ledger::Amount& source, Direction d, const Time& time);

  const std::vector<Conversion>& conversions() const { return conversions_; }
  const std::vector<IssueEvent>& issues() const { return issues_; }

 private:
  struct Keys {
    crypto::KeyPair money;
    crypto::KeyPair near;
  };
  void transfer(ledger::LocalChain& chain, const crypto::KeyPair& from, const crypto::KeyPair& to,
                const ledger::Amount& amount, const crypto::KeyPair& miner);

  ledger::LocalChain money_;
  ledger::LocalChain near_;
  ExchangeMarket market_;
  crypto::Rng rng_;
  std::map<std::string, Keys> keys_;
  std::vector<Conversion> conversions_;
  std::vector<IssueEvent> issues_;
};

}  // namespace nakamoto::extensions
