#include "nakamoto/netsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "nakamoto/extensions/profiles.hpp"

namespace nakamoto::netsim {

namespace {

std::string where(const std::string& path, const std::string& reason) {
  return path.empty() ? reason : path + ": " + reason;
}

}  // namespace

InvalidConfig::InvalidConfig(const std::string& reason, std::optional<std::size_t> line,
                             std::optional<std::size_t> column, std::string path)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ", column " + std::to_string(column.value_or(0)) +
                                    ": " + where(path, reason)
                              : where(path, reason)),
      reason_(reason),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

std::string to_string(Role r) {
  switch (r) {
    case Role::user: return "user";
    case Role::miner: return "miner";
    case Role::indirect_user: return "indirect-user";
    case Role::participation_service: return "participation-service";
    case Role::attacker: return "attacker";
  }
  return "?";
}

std::string to_string(AttackKind k) { return k == AttackKind::double_spend ? "double-spend" : "majority-rewrite"; }
std::string to_string(MiningMode m) { return m == MiningMode::sampled ? "sampled" : "hashcash"; }
std::string to_string(Estimator e) { return e == Estimator::plain ? "plain" : "tilted"; }

const ParticipantConfig* ScenarioConfig::find(std::string_view id) const {
  for (const auto& p : participants)
    if (p.id == id) return &p;
  return nullptr;
}

std::vector<std::string> ScenarioConfig::miners() const {
  std::vector<std::string> out;
  for (const auto& p : participants)
    if ((p.role == Role::miner || p.role == Role::attacker) && p.hash_power > 0) out.push_back(p.id);
  return out;
}

void ScenarioConfig::validate(bool require_seed) const {
  auto fail = [](const std::string& path, const std::string& reason) {
    throw InvalidConfig(reason, std::nullopt, std::nullopt, path);
  };
  if (require_seed && !seed) fail("seed", "seed is required");
  if (block_interval <= Rat(0)) fail("mining", "block_interval must be positive");
  if (difficulty == 0) fail("mining", "difficulty must be positive");
  if (latency.low < Rat(0) || latency.high < latency.low) fail("latency", "need 0 <= low <= high");
  if (stop.time <= Rat(0)) fail("stop", "stop time must be positive");
  if (profile.quantum <= Rat(0)) fail("profile", "quantum must be positive");

  std::set<std::string> ids;
  double power = 0;
  for (std::size_t i = 0; i < participants.size(); ++i) {
    const auto& p = participants[i];
    std::string path = "participants[" + std::to_string(i) + "]";
    if (p.id.empty()) fail(path, "participant id must not be empty");
    if (!ids.insert(p.id).second) fail(path, "duplicate participant id '" + p.id + "'");
    if (!std::isfinite(p.hash_power) || p.hash_power < 0) fail(path, "hash_power must be a non-negative number");
    bool mines = p.role == Role::miner || p.role == Role::attacker;
    if (!mines && p.hash_power != 0) fail(path, to_string(p.role) + " cannot hold hash power");
    power += p.hash_power;
  }
  if (power <= 0) fail("participants", "total hash power must be positive");
  for (std::size_t i = 0; i < participants.size(); ++i) {
    const auto& p = participants[i];
    if (p.role != Role::indirect_user) continue;
    const ParticipantConfig* s = find(p.service);
    if (!s || s->role != Role::participation_service)
      fail("participants[" + std::to_string(i) + "]",
           "indirect user '" + p.id + "' needs a participation service, got '" + p.service + "'");
  }

  auto keyed = [&](const std::string& path, const std::string& id) {
    const ParticipantConfig* p = find(id);
    if (!p) fail(path, "unknown participant '" + id + "'");
    if (p->role == Role::indirect_user) fail(path, "indirect user '" + id + "' holds no keys");
  };
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& a = actions[i];
    std::string path = "actions[" + std::to_string(i) + "]";
    if (a.at < Rat(0)) fail(path, "action time must be non-negative");
    if (const auto* t = std::get_if<TransferAction>(&a.what)) {
      keyed(path, t->from);
      keyed(path, t->to);
      if (t->amount <= Rat(0)) fail(path, "transfer amount must be positive");
      if (t->fee && *t->fee < Rat(0)) fail(path, "fee must be non-negative");
    } else if (const auto* part = std::get_if<PartitionAction>(&a.what)) {
      if (part->groups.size() < 2) fail(path, "a partition needs at least two groups");
      std::set<std::string> seen;
      for (const auto& g : part->groups)
        for (const auto& id : g) {
          if (!find(id)) fail(path, "unknown participant '" + id + "'");
          if (!seen.insert(id).second) fail(path, "overlapping groups: '" + id + "' appears twice");
        }
      if (part->heal <= a.at) fail(path, "heal time must be after the partition starts");
    } else {
      const auto& s = std::get<ServiceAction>(a.what);
      const ParticipantConfig* svc = find(s.service);
      if (!svc || svc->role != Role::participation_service) fail(path, "unknown participation service '" + s.service + "'");
      if (s.amount <= Rat(0)) fail(path, "amount must be positive");
      const ParticipantConfig* user = find(s.user);
      if (!user || user->role != Role::indirect_user || user->service != s.service)
        fail(path, "'" + s.user + "' is not an indirect user of '" + s.service + "'");
      if (s.op == ServiceAction::Op::withdraw) keyed(path, s.to);
      if (s.op == ServiceAction::Op::transfer) {
        const ParticipantConfig* to = find(s.to);
        if (!to || to->role != Role::indirect_user || to->service != s.service)
          fail(path, "transfer target '" + s.to + "' is not an indirect user of '" + s.service + "'");
      }
    }
  }

  if (attack) {
    const ParticipantConfig* a = find(attack->attacker);
    if (!a || a->role != Role::attacker) fail("attack", "attacker must name a participant with role attacker");
    const ParticipantConfig* v = find(attack->victim);
    if (!v || v->role == Role::attacker || v->role == Role::indirect_user)
      fail("attack", "victim must name a key-holding honest participant");
    if (attack->give_up_deficit == 0) fail("attack", "give_up_deficit must be positive");
    bool honest = false;
    for (const auto& p : participants) honest = honest || (p.role == Role::miner && p.hash_power > 0);
    if (!honest) fail("attack", "an attack needs at least one honest miner");
  }
  if (monte_carlo) {
    if (!attack) fail("monte_carlo", "monte_carlo needs an attack section");
    if (monte_carlo->runs == 0) fail("monte_carlo", "runs must be positive");
    for (double q : monte_carlo->powers)
      if (!(q >= 0 && q < 1)) fail("monte_carlo", "attacker powers must lie in [0, 1)");
    if (monte_carlo->confirmations.empty() || monte_carlo->powers.empty())
      fail("monte_carlo", "powers and confirmations must not be empty");
    if (!(monte_carlo->tilt > 0 && monte_carlo->tilt < 1)) fail("monte_carlo", "tilt must lie in (0, 1)");
    if (monte_carlo->estimator == Estimator::tilted && mining != MiningMode::sampled)
      fail("monte_carlo", "the tilted estimator needs sampled mining");
  }
}

namespace {

// Tracks the source position of every entry so that semantic errors found
// after parsing still point into the file.
struct Reader {
  std::map<std::string, YAML::Mark> marks;

  [[noreturn]] static void fail(const YAML::Node& n, const std::string& reason) {
    YAML::Mark m = n.Mark();
    if (m.is_null()) throw InvalidConfig(reason);
    throw InvalidConfig(reason, m.line + 1, m.column + 1);
  }

  static void only_keys(const YAML::Node& n, std::initializer_list<const char*> keys) {
    if (!n.IsMap()) fail(n, "expected a mapping");
    for (const auto& kv : n) {
      std::string k = kv.first.as<std::string>();
      bool known = false;
      for (const char* allowed : keys) known = known || k == allowed;
      if (!known) fail(kv.first, "unknown key '" + k + "'");
    }
  }

  static std::string str(const YAML::Node& n) {
    if (!n.IsScalar()) fail(n, "expected a scalar");
    return n.Scalar();
  }

  static Rat rat(const YAML::Node& n) {
    try {
      return Rat::parse(str(n));
    } catch (const std::invalid_argument&) {
      fail(n, "expected a rational number, got '" + n.Scalar() + "'");
    }
  }

  static double real(const YAML::Node& n) {
    try {
      return Rat::parse(str(n)).to_double();
    } catch (const std::invalid_argument&) {
      fail(n, "expected a number, got '" + n.Scalar() + "'");
    }
  }

  static std::uint64_t count(const YAML::Node& n) {
    Rat r = rat(n);
    if (r < Rat(0) || r.den() != 1 || r.num() > numerics::BigInt(UINT64_MAX)) fail(n, "expected a non-negative integer");
    return static_cast<std::uint64_t>(r.num());
  }

  static bool flag(const YAML::Node& n) {
    std::string s = str(n);
    if (s == "true") return true;
    if (s == "false") return false;
    fail(n, "expected true or false");
  }

  template <class E>
  static E pick(const YAML::Node& n, std::initializer_list<std::pair<const char*, E>> options) {
    std::string s = str(n);
    std::string names;
    for (const auto& [name, value] : options) {
      if (s == name) return value;
      names += names.empty() ? name : std::string(", ") + name;
    }
    fail(n, "unknown value '" + s + "' (expected one of " + names + ")");
  }

  static void profile(const YAML::Node& n, ledger::MoneyProfile& p) {
    only_keys(n, {"base", "quantum", "initial_yield", "halving_interval", "epochs", "min_fee", "epsilon",
                  "checkpoint", "alpha", "signature", "digest_bytes"});
    if (n["base"]) {
      std::string b = str(n["base"]);
      if (b == "desk") p = ledger::MoneyProfile::desk();
      else if (b == "bitcoin") p = ledger::MoneyProfile::bitcoin();
      else if (b == "bitguilder") p = extensions::bitguilder();
      else if (b == "bitguilder-plus") p = extensions::bitguilder_plus();
      else fail(n["base"], "unknown base profile '" + b + "'");
    }
    auto units = [&](const YAML::Node& v) {
      try {
        return p.units(rat(v));
      } catch (const std::exception& e) {
        fail(v, e.what());
      }
    };
    if (n["quantum"]) {
      Rat q = rat(n["quantum"]);
      if (q <= Rat(0)) fail(n["quantum"], "quantum must be positive");
      // Keep h0 and the minimum fee in units while the quantum changes.
      Rat h0 = p.initial_yield.to_rat() * p.quantum, fee = p.min_fee.to_rat() * p.quantum;
      p.quantum = q;
      try {
        p.initial_yield = p.units(h0);
        p.min_fee = p.units(fee);
      } catch (const std::exception& e) {
        fail(n["quantum"], e.what());
      }
    }
    if (n["initial_yield"]) p.initial_yield = units(n["initial_yield"]);
    if (n["halving_interval"]) {
      p.halving_interval = count(n["halving_interval"]);
      if (p.halving_interval == 0) fail(n["halving_interval"], "halving_interval must be positive");
    }
    if (n["epochs"]) p.epochs = count(n["epochs"]);
    if (n["min_fee"]) p.min_fee = units(n["min_fee"]);
    if (n["epsilon"]) {
      p.epsilon = rat(n["epsilon"]);
      if (p.epsilon < Rat(0)) fail(n["epsilon"], "epsilon must be non-negative");
    }
    if (n["checkpoint"]) p.checkpoint = count(n["checkpoint"]);
    if (n["alpha"]) p.alpha = static_cast<unsigned>(count(n["alpha"]));
    if (n["signature"]) {
      try {
        p.scheme = crypto::signature_scheme_from_string(str(n["signature"]));
      } catch (const std::invalid_argument& e) {
        fail(n["signature"], e.what());
      }
    }
    if (n["digest_bytes"]) {
      try {
        p.digest_length = crypto::digest_length_from_bytes(count(n["digest_bytes"]));
      } catch (const std::exception& e) {
        fail(n["digest_bytes"], e.what());
      }
    }
  }

  std::vector<std::string> ids(const YAML::Node& n) {
    if (!n.IsSequence()) fail(n, "expected a list of participant ids");
    std::vector<std::string> out;
    for (const auto& x : n) out.push_back(str(x));
    return out;
  }

  Action action(const YAML::Node& n) {
    only_keys(n, {"at", "transfer", "partition", "service"});
    if (!n["at"]) fail(n, "action needs 'at'");
    Action a{rat(n["at"]), TransferAction{}};
    int kinds = !!n["transfer"] + !!n["partition"] + !!n["service"];
    if (kinds != 1) fail(n, "action needs exactly one of transfer, partition, service");
    if (const YAML::Node t = n["transfer"]) {
      only_keys(t, {"from", "to", "amount", "fee"});
      if (!t["from"] || !t["to"] || !t["amount"]) fail(t, "transfer needs from, to and amount");
      TransferAction x{str(t["from"]), str(t["to"]), rat(t["amount"]), std::nullopt};
      if (t["fee"]) x.fee = rat(t["fee"]);
      a.what = x;
    } else if (const YAML::Node p = n["partition"]) {
      only_keys(p, {"groups", "heal"});
      if (!p["groups"] || !p["heal"]) fail(p, "partition needs groups and heal");
      if (!p["groups"].IsSequence()) fail(p["groups"], "groups must be a list of lists");
      PartitionAction x;
      for (const auto& g : p["groups"]) x.groups.push_back(ids(g));
      x.heal = rat(p["heal"]);
      a.what = x;
    } else {
      const YAML::Node s = n["service"];
      only_keys(s, {"op", "service", "user", "to", "amount"});
      if (!s["op"] || !s["service"] || !s["user"] || !s["amount"]) fail(s, "service needs op, service, user, amount");
      ServiceAction x;
      x.op = pick<ServiceAction::Op>(s["op"], {{"deposit", ServiceAction::Op::deposit},
                                               {"withdraw", ServiceAction::Op::withdraw},
                                               {"transfer", ServiceAction::Op::transfer}});
      x.service = str(s["service"]);
      x.user = str(s["user"]);
      if (s["to"]) x.to = str(s["to"]);
      x.amount = rat(s["amount"]);
      a.what = x;
    }
    return a;
  }

  ScenarioConfig read(const YAML::Node& root) {
    if (!root.IsMap()) fail(root, "scenario must be a mapping");
    only_keys(root, {"name", "seed", "profile", "mining", "latency", "participants", "actions", "attack",
                     "monte_carlo", "stop"});
    ScenarioConfig c;
    if (root["name"]) c.name = str(root["name"]);
    if (root["seed"]) c.seed = count(root["seed"]);
    if (root["profile"]) {
      profile(root["profile"], c.profile);
      marks["profile"] = root["profile"].Mark();
    }
    if (const YAML::Node m = root["mining"]) {
      only_keys(m, {"mode", "difficulty", "block_interval"});
      if (m["mode"]) c.mining = pick<MiningMode>(m["mode"], {{"sampled", MiningMode::sampled}, {"hashcash", MiningMode::hashcash}});
      if (m["difficulty"]) c.difficulty = count(m["difficulty"]);
      if (m["block_interval"]) c.block_interval = rat(m["block_interval"]);
      marks["mining"] = m.Mark();
    }
    if (const YAML::Node l = root["latency"]) {
      only_keys(l, {"model", "low", "high"});
      if (l["model"])
        c.latency.kind = pick<LatencyModel::Kind>(l["model"], {{"fixed", LatencyModel::Kind::fixed},
                                                               {"uniform", LatencyModel::Kind::uniform}});
      if (l["low"]) c.latency.low = rat(l["low"]);
      if (l["high"]) c.latency.high = rat(l["high"]);
      if (c.latency.kind == LatencyModel::Kind::fixed) c.latency.high = c.latency.low;
      marks["latency"] = l.Mark();
    }
    if (const YAML::Node ps = root["participants"]) {
      if (!ps.IsSequence()) fail(ps, "participants must be a list");
      marks["participants"] = ps.Mark();
      for (const auto& n : ps) {
        only_keys(n, {"id", "role", "hash_power", "service", "isolated_constructor"});
        if (!n["id"] || !n["role"]) fail(n, "participant needs id and role");
        ParticipantConfig p;
        p.id = str(n["id"]);
        p.role = pick<Role>(n["role"], {{"user", Role::user},
                                        {"miner", Role::miner},
                                        {"indirect-user", Role::indirect_user},
                                        {"participation-service", Role::participation_service},
                                        {"attacker", Role::attacker}});
        if (n["hash_power"]) p.hash_power = real(n["hash_power"]);
        if (n["service"]) p.service = str(n["service"]);
        if (n["isolated_constructor"]) p.isolated_constructor = flag(n["isolated_constructor"]);
        marks["participants[" + std::to_string(c.participants.size()) + "]"] = n.Mark();
        c.participants.push_back(std::move(p));
      }
    }
    if (const YAML::Node as = root["actions"]) {
      if (!as.IsSequence()) fail(as, "actions must be a list");
      for (const auto& n : as) {
        marks["actions[" + std::to_string(c.actions.size()) + "]"] = n.Mark();
        c.actions.push_back(action(n));
      }
    }
    if (const YAML::Node a = root["attack"]) {
      only_keys(a, {"kind", "attacker", "victim", "confirmations", "give_up_deficit"});
      AttackConfig x;
      if (a["kind"])
        x.kind = pick<AttackKind>(a["kind"], {{"double-spend", AttackKind::double_spend},
                                              {"majority-rewrite", AttackKind::majority_rewrite}});
      if (!a["attacker"] || !a["victim"]) fail(a, "attack needs attacker and victim");
      x.attacker = str(a["attacker"]);
      x.victim = str(a["victim"]);
      if (a["confirmations"]) x.confirmations = count(a["confirmations"]);
      if (a["give_up_deficit"]) x.give_up_deficit = count(a["give_up_deficit"]);
      c.attack = x;
      marks["attack"] = a.Mark();
    }
    if (const YAML::Node m = root["monte_carlo"]) {
      only_keys(m, {"runs", "powers", "confirmations", "estimator", "tilt"});
      MonteCarloConfig x;
      if (m["runs"]) x.runs = count(m["runs"]);
      if (m["powers"]) {
        if (!m["powers"].IsSequence()) fail(m["powers"], "powers must be a list");
        x.powers.clear();
        for (const auto& q : m["powers"]) x.powers.push_back(real(q));
      }
      if (m["confirmations"]) {
        if (!m["confirmations"].IsSequence()) fail(m["confirmations"], "confirmations must be a list");
        x.confirmations.clear();
        for (const auto& k : m["confirmations"]) x.confirmations.push_back(count(k));
      }
      if (m["estimator"])
        x.estimator = pick<Estimator>(m["estimator"], {{"plain", Estimator::plain}, {"tilted", Estimator::tilted}});
      if (m["tilt"]) x.tilt = real(m["tilt"]);
      c.monte_carlo = x;
      marks["monte_carlo"] = m.Mark();
    }
    if (const YAML::Node s = root["stop"]) {
      only_keys(s, {"time", "blocks"});
      if (s["time"]) c.stop.time = rat(s["time"]);
      if (s["blocks"]) c.stop.blocks = count(s["blocks"]);
      marks["stop"] = s.Mark();
    }
    return c;
  }
};

}  // namespace

ScenarioConfig parse_scenario(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw InvalidConfig(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root || root.IsNull()) throw InvalidConfig("empty scenario", 1, 1);
  Reader r;
  ScenarioConfig c;
  try {
    c = r.read(root);
  } catch (const YAML::Exception& e) {
    throw InvalidConfig(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  try {
    c.validate();
  } catch (const InvalidConfig& e) {
    auto it = r.marks.find(e.path());
    if (it == r.marks.end()) {
      // "participants[3]" may fall back to "participants".
      auto cut = e.path().find('[');
      if (cut != std::string::npos) it = r.marks.find(e.path().substr(0, cut));
    }
    if (it == r.marks.end() || it->second.is_null()) throw;
    throw InvalidConfig(e.reason(), it->second.line + 1, it->second.column + 1, e.path());
  }
  return c;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidConfig("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace nakamoto::netsim
