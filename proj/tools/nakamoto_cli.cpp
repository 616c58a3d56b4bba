#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nakamoto/accounting/wealth.hpp"
#include "nakamoto/extensions/profiles.hpp"
#include "nakamoto/ledger/chain_file.hpp"
#include "nakamoto/ledger/local_chain.hpp"
#include "nakamoto/netsim/attacks.hpp"
#include "nakamoto/numerics/expr.hpp"

using namespace nakamoto;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kRuntimeFailure = 2;

// Bad input (config, expression, dump, access file); exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// ---- run-scenario ----

std::vector<ledger::Block> chain_blocks(const consensus::ChainView& view) {
  std::vector<ledger::Block> out;
  for (auto n = view.tip(); n; n = n->parent()) out.push_back(n->block());
  std::reverse(out.begin(), out.end());
  return out;
}

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned parallel = 1;
};

int run_scenario(const RunArgs& a) {
  netsim::ScenarioConfig cfg;
  try {
    cfg = netsim::load_scenario(a.config);
  } catch (const netsim::InvalidConfig& e) {
    std::cerr << "invalid config " << a.config << ": " << e.what() << "\n";
    return kInvalidInput;
  }
  std::uint64_t seed = 0;
  std::string source = "default";
  if (a.seed) {
    seed = *a.seed;
    source = "flag";
  } else if (cfg.seed) {
    seed = *cfg.seed;
    source = "config";
  }
  std::cout << ordered_json{{"type", "seed"}, {"seed", seed}, {"source", source}}.dump() << "\n";
  if (source == "default") std::cerr << "note: no seed given, using seed 0\n";

  std::vector<std::string> lines;
  std::optional<netsim::RunResult> single;
  if (cfg.monte_carlo && cfg.attack->kind == netsim::AttackKind::double_spend) {
    lines = netsim::double_spend_study(cfg, *cfg.monte_carlo, seed, a.parallel).json_lines();
  } else if (cfg.monte_carlo) {
    for (double q : cfg.monte_carlo->powers)
      for (std::uint64_t k : cfg.monte_carlo->confirmations)
        lines.push_back(netsim::majority_rewrite_study(cfg, q, k, cfg.monte_carlo->runs, seed, a.parallel).json());
  } else {
    netsim::RunOptions opts;
    opts.keep_trace = !a.out.empty();
    single = netsim::run(cfg, seed, opts);
    lines = single->json_lines(cfg);
  }
  for (const auto& l : lines) std::cout << l << "\n";

  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    std::ofstream metrics(std::filesystem::path(a.out) / "metrics.jsonl");
    for (const auto& l : lines) metrics << l << "\n";
    if (single) {
      std::ofstream trace(std::filesystem::path(a.out) / "trace.txt");
      for (const auto& l : single->trace) trace << l << "\n";
      ledger::write_chain_dump((std::filesystem::path(a.out) / "chain.dump").string(), chain_blocks(single->reference));
      std::ofstream addrs(std::filesystem::path(a.out) / "addresses.csv");
      addrs << "participant,address\n";
      for (const auto& [id, addr] : single->addresses) addrs << id << "," << addr.hex() << "\n";
    }
  }
  if (single) std::cout << ordered_json{{"type", "digest"}, {"trace_digest", single->trace_digest}}.dump() << "\n";
  return kOk;
}

// ---- inspect-chain ----

ledger::MoneyProfile profile_by_name(const std::string& name) {
  if (name == "desk") return ledger::MoneyProfile::desk();
  if (name == "bitcoin") return ledger::MoneyProfile::bitcoin();
  if (name == "bitguilder") return extensions::bitguilder();
  if (name == "bitguilder-plus") return extensions::bitguilder_plus();
  if (name == "nmcoin") return extensions::nmcoin();
  throw InputError("unknown profile '" + name + "'");
}

struct ProfileArgs {
  std::string profile = "desk";
  std::string config;
};

// The profile a dump was written under: the scenario's (with proof of work
// unchecked for sampled mining) or a named one.
ledger::MoneyProfile resolve_profile(const ProfileArgs& p) {
  if (p.config.empty()) return profile_by_name(p.profile);
  netsim::ScenarioConfig cfg = netsim::load_scenario(p.config);
  ledger::MoneyProfile prof = cfg.profile;
  if (cfg.mining == netsim::MiningMode::sampled) prof.check_pow = false;
  return prof;
}

std::vector<ledger::Block> read_dump(const std::string& path) {
  std::string bytes = read_file(path);
  std::istringstream in(bytes);
  try {
    return ledger::read_chain_dump(in);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed chain dump: ") + e.what());
  }
}

int inspect_chain(const std::string& dump, bool validate, const ProfileArgs& pa) {
  ledger::MoneyProfile profile = resolve_profile(pa);
  std::vector<ledger::Block> blocks = read_dump(dump);
  if (!validate) {
    for (const auto& b : blocks) std::cout << ledger::block_summary_json(b, profile) << "\n";
    return kOk;
  }
  ledger::ChainCheck c = ledger::validate_chain(blocks, profile);
  if (c.missing_genesis) {
    std::cout << "FAIL genesis missing: the dump holds no blocks\n";
    return kInvalidInput;
  }
  if (!c.ok()) {
    const ledger::BlockRejection& r = *c.rejection;
    std::string letter = ledger::condition_letter(r.rule);
    std::cout << "FAIL block " << *c.failed_at << ": "
              << (letter.empty() ? "rule " : "condition (" + letter + ") ") << ledger::to_string(r.rule) << ": "
              << r.detail << "\n";
    return kInvalidInput;
  }
  std::cout << "OK, " << c.blocks << " blocks, total difficulty " << c.total_difficulty.str() << "\n";
  return kOk;
}

// ---- eval ----

// "name = quantity" per line; '#' starts a comment.
numerics::Env read_env(const std::string& path) {
  numerics::Env env;
  std::istringstream in(read_file(path));
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ":" + std::to_string(no) + ": expected name = quantity");
    std::string name = trim(line.substr(0, eq));
    try {
      env.insert_or_assign(name, numerics::Quantity::parse(trim(line.substr(eq + 1))));
    } catch (const std::exception& e) {
      throw InputError(path + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return env;
}

int eval(const std::string& text, const std::string& env_path) {
  numerics::Env env;
  if (!env_path.empty()) env = read_env(env_path);
  try {
    std::cout << numerics::eval_expr(numerics::parse_expr(text), env).str() << "\n";
  } catch (const numerics::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInvalidInput;
  } catch (const numerics::DimensionMismatch& e) {
    std::cerr << e.what() << "\n";
    return kInvalidInput;
  } catch (const numerics::UnboundVariable& e) {
    std::cerr << "unbound variable '" << e.name() << "'\n";
    return kInvalidInput;
  }
  return kOk;
}

// ---- wealth ----

// "agent,address_hex" per line, optional header, '#' comments.
accounting::AccessRelation read_access(const std::string& path) {
  accounting::AccessRelation rel;
  std::istringstream in(read_file(path));
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty() || line == "agent,address") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw InputError(path + ":" + std::to_string(no) + ": expected agent,address");
    try {
      rel.add(trim(line.substr(0, comma)), crypto::Address::from_hex(trim(line.substr(comma + 1))),
              accounting::Provenance::self_asserted);
    } catch (const std::exception& e) {
      throw InputError(path + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  return rel;
}

int wealth(const std::string& dump, const std::string& access_path, const std::string& agent, const std::string& time,
           const ProfileArgs& pa) {
  ledger::MoneyProfile profile = resolve_profile(pa);
  std::vector<ledger::Block> blocks = read_dump(dump);
  ledger::LocalChain chain(profile);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (auto r = chain.append(blocks[i]))
      throw InputError("ledger snapshot is invalid at block " + std::to_string(i) + ": " + r->detail);
  accounting::Holdings q = accounting::holdings_of(chain.state(), profile);
  accounting::AccessRelation access = read_access(access_path);
  numerics::Rat t = numerics::Rat::parse(time);
  std::vector<accounting::WealthRow> rows;
  std::set<std::string> agents = access.agents();
  if (!agent.empty()) {
    if (!agents.count(agent)) throw InputError("agent '" + agent + "' has no access entries");
    agents = {agent};
  }
  for (const auto& a : agents) {
    rows.push_back({a, t, accounting::wealth1(a, q, access)});
    rows.push_back({a, t, accounting::taxation(a, q, access)});
  }
  std::cout << accounting::wealth_csv(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Informational money simulator and inspection tools"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run-scenario", "Run a scenario file and print metrics as JSON lines");
  run->add_option("config", run_args.config, "Scenario file (YAML)")->required();
  run->add_option("--seed", run_args.seed, "Seed; defaults to the config's, then 0");
  run->add_option("--out", run_args.out, "Directory for metrics.jsonl, trace.txt, chain.dump, addresses.csv");
  run->add_option("--parallel", run_args.parallel, "Worker threads for Monte Carlo runs")->check(CLI::PositiveNumber);

  std::string dump;
  bool validate = false;
  ProfileArgs profile_args;
  auto* inspect = app.add_subcommand("inspect-chain", "Summarize or validate a chain dump");
  inspect->add_option("dump", dump, "Chain dump file")->required();
  inspect->add_flag("--validate", validate, "Replay every block and report the first violated rule");
  inspect->add_option("--profile", profile_args.profile, "desk, bitcoin, bitguilder, bitguilder-plus or nmcoin");
  inspect->add_option("--config", profile_args.config, "Take the profile from this scenario file");

  std::string expr, env_path;
  auto* ev = app.add_subcommand("eval", "Evaluate an arithmetic expression over quantities");
  ev->add_option("expr", expr, "Expression")->required();
  ev->add_option("--env", env_path, "File of 'name = quantity' bindings");

  std::string wealth_dump, access_path, agent, wealth_time = "0";
  ProfileArgs wealth_profile;
  auto* wl = app.add_subcommand("wealth", "Wealth and taxation per agent from a ledger snapshot");
  wl->add_option("--ledger", wealth_dump, "Chain dump holding the ledger snapshot")->required();
  wl->add_option("--access", access_path, "CSV of agent,address pairs")->required();
  wl->add_option("--agent", agent, "Only this agent");
  wl->add_option("--time", wealth_time, "Time label for the rows");
  wl->add_option("--profile", wealth_profile.profile, "Money profile of the ledger");
  wl->add_option("--config", wealth_profile.config, "Take the profile from this scenario file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*run) return run_scenario(run_args);
    if (*inspect) return inspect_chain(dump, validate, profile_args);
    if (*ev) return eval(expr, env_path);
    if (*wl) return wealth(wealth_dump, access_path, agent, wealth_time, wealth_profile);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const netsim::InvalidConfig& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
  return kOk;
}
