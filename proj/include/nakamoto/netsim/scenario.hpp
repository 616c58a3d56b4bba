#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nakamoto/ledger/profile.hpp"
#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::netsim {

using numerics::Rat;

enum class Role { user, miner, indirect_user, participation_service, attacker };
enum class AttackKind { double_spend, majority_rewrite };
enum class MiningMode { sampled, hashcash };
enum class Estimator { plain, tilted };

std::string to_string(Role r);
std::string to_string(AttackKind k);
std::string to_string(MiningMode m);
std::string to_string(Estimator e);

struct ParticipantConfig {
  std::string id;
  Role role = Role::user;
  double hash_power = 0;  // miners and attackers
  std::string service;    // indirect users: the participation service holding their claims
  // Key material lives in a separate constructor component that never
  // touches the network; false merges the three roles into one.
  bool isolated_constructor = true;
};

struct LatencyModel {
  enum class Kind { fixed, uniform };
  Kind kind = Kind::uniform;
  Rat low{1};
  Rat high{5};
};

struct TransferAction {
  std::string from;
  std::string to;
  Rat amount;                // units of the money
  std::optional<Rat> fee;    // default: profile min fee
};

struct PartitionAction {
  std::vector<std::vector<std::string>> groups;
  Rat heal;  // absolute time
};

struct ServiceAction {
  enum class Op { deposit, withdraw, transfer };
  Op op = Op::deposit;
  std::string service;
  std::string user;
  std::string to;  // transfer: another indirect user; withdraw: key-holding participant
  Rat amount;
};

struct Action {
  Rat at;
  std::variant<TransferAction, PartitionAction, ServiceAction> what;
};

struct AttackConfig {
  AttackKind kind = AttackKind::double_spend;
  std::string attacker;
  std::string victim;
  std::uint64_t confirmations = 1;
  std::uint64_t give_up_deficit = 20;
};

struct MonteCarloConfig {
  std::uint64_t runs = 1000;
  std::vector<double> powers{0.1, 0.2, 0.3};
  std::vector<std::uint64_t> confirmations{0, 1, 2, 3, 4, 5, 6};
  Estimator estimator = Estimator::plain;
  double tilt = 0.5;  // attacker power used to draw blocks under `tilted`
};

struct StopCondition {
  Rat time{6000};
  std::optional<std::uint64_t> blocks;  // stop once any honest view reaches this length
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::optional<std::uint64_t> seed;
  ledger::MoneyProfile profile = ledger::MoneyProfile::desk();
  MiningMode mining = MiningMode::sampled;
  std::uint64_t difficulty = 16;  // hashcash attempts per block on average
  Rat block_interval{600};        // ticks per block for the whole network
  LatencyModel latency;
  std::vector<ParticipantConfig> participants;
  std::vector<Action> actions;
  std::optional<AttackConfig> attack;
  std::optional<MonteCarloConfig> monte_carlo;
  StopCondition stop;

  const ParticipantConfig* find(std::string_view id) const;
  /// Mining participants (miners and attackers) with positive power, in order.
  std::vector<std::string> miners() const;
  /// Throws InvalidConfig with a reason; `require_seed` for a bare run.
  void validate(bool require_seed = false) const;
};

class InvalidConfig : public std::runtime_error {
 public:
  explicit InvalidConfig(const std::string& reason, std::optional<std::size_t> line = std::nullopt,
                         std::optional<std::size_t> column = std::nullopt, std::string path = "");
  const std::string& reason() const { return reason_; }
  /// Config path of the offending entry, e.g. "participants[2]"; may be empty.
  const std::string& path() const { return path_; }
  std::optional<std::size_t> line() const { return line_; }      // 1-based
  std::optional<std::size_t> column() const { return column_; }  // 1-based

 private:
  std::string reason_;
  std::string path_;
  std::optional<std::size_t> line_, column_;
};

/// YAML scenario text; errors carry the position of the offending node.
ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::filesystem::path& path);

}  // namespace nakamoto::netsim
