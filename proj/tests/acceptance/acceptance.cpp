// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nakamoto/accounting/expected_value.hpp"
#include "nakamoto/accounting/wealth.hpp"
#include "nakamoto/extensions/loan.hpp"
#include "nakamoto/extensions/profiles.hpp"
#include "nakamoto/netsim/attacks.hpp"
#include "nakamoto/promises/promise_scenario.hpp"
#include "oracles/generators.hpp"
#include "oracles/replay_check.hpp"
#include "oracles/trace_gen.hpp"

using namespace nakamoto;
using numerics::Quantity;
using numerics::Rat;

namespace {

const std::filesystem::path kScenarios = NAKAMOTO_SCENARIO_DIR;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0: no runtime requirement
  std::function<Verdict()> check;
};

std::string fmt(double x, int precision = 4) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

// ---- 1: supply bound ----

Verdict supply_bound() {
  netsim::ScenarioConfig cfg;
  cfg.name = "desk-full-run";
  cfg.profile = ledger::MoneyProfile::desk();
  cfg.profile.scheme = crypto::SignatureScheme::null;
  cfg.mining = netsim::MiningMode::sampled;
  cfg.difficulty = 1;
  cfg.participants = {{"solo", netsim::Role::miner, 1.0, "", false}};
  // Six epochs of ten blocks each, plus ten blocks past the last reward.
  cfg.stop.blocks = 70;
  cfg.stop.time = numerics::Rat(1000000);
  netsim::RunResult r = netsim::run(cfg, 1);
  const ledger::MoneyProfile& p = cfg.profile;
  Rat minted = p.quantity(r.reference.tip()->state().minted_total()).value;
  Rat bound(1000);
  Rat floor = bound * (Rat(1) - Rat::pow2(-6));
  Rat btc = ledger::MoneyProfile::bitcoin().quantity(ledger::total_supply(ledger::MoneyProfile::bitcoin())).value;
  bool ok = r.reference.length() == 70 && minted <= bound && minted >= floor && btc <= Rat(21000000) &&
            btc > Rat(20999999);
  return {ok, "desk minted " + minted.str() + " over " + std::to_string(r.reference.length()) +
                  " blocks (bounds [" + floor.str() + ", 1000]); bitcoin closed form " + fmt(btc.to_double(), 10)};
}

// ---- 2: expected value ----

Verdict expected_value_fifty() {
  auto ev = accounting::expected_value(Rat::pow10(-5), Quantity(Rat::pow10(14), "EUR"), Rat(2) * Rat::pow10(7));
  return {ev.value == Quantity(50, "EUR"), "p = 1e-5, world money 1e14 EUR, supply 2e7: " + ev.value.str()};
}

// ---- 3: incremental state equals replay ----

Verdict replay_equivalence() {
  std::size_t states = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    oracle::Trace t = oracle::random_trace(100000 + seed);
    const auto& blocks = t.chain.blocks();
    auto params = oracle::params_for(t.chain.profile());
    for (std::size_t n = 1; n <= blocks.size(); ++n, ++states) {
      std::vector<ledger::Block> prefix(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(n));
      if (auto diff = oracle::mismatch(t.chain.state_at(n), oracle::replay(prefix, params)))
        return {false, "trace " + std::to_string(seed) + " block " + std::to_string(n) + ": " + *diff};
    }
  }
  return {true, "1000 traces, " + std::to_string(states) + " intermediate states equal to replay from genesis"};
}

// ---- 4: double-spend curves ----

Verdict double_spend_curves() {
  netsim::ScenarioConfig cfg = netsim::load_scenario(kScenarios / "double_spend.cfg");
  netsim::MonteCarloConfig mc = *cfg.monte_carlo;
  mc.runs = 10000;
  mc.powers = {0.1, 0.2, 0.3};
  mc.confirmations = {0, 1, 2, 3, 4, 5, 6};
  std::uint64_t seed = *cfg.seed;

  mc.estimator = netsim::Estimator::plain;
  netsim::DoubleSpendStudy plain = netsim::double_spend_study(cfg, mc, seed);
  mc.estimator = netsim::Estimator::tilted;
  netsim::DoubleSpendStudy tilted = netsim::double_spend_study(cfg, mc, seed);

  bool ok = true;
  std::ostringstream d;
  for (std::size_t i = 0; i < plain.curves.size(); ++i) {
    const auto& pc = plain.curves[i];
    const auto& tc = tilted.curves[i];
    bool curve_ok = pc.monotone && tc.monotone && tc.fit.defined && tc.fit.r2 >= 0.9;
    ok = ok && curve_ok;
    d << "\n    q=" << pc.q << " plain[";
    for (const auto& p : pc.points) d << (&p == &pc.points.front() ? "" : " ") << p.successes;
    d << "] monotone=" << pc.monotone << " R2=" << (pc.fit.defined ? fmt(pc.fit.r2) : "undefined");
    d << " | tilted[";
    for (const auto& p : tc.points) d << (&p == &tc.points.front() ? "" : " ") << fmt(p.rate, 3);
    d << "] monotone=" << tc.monotone << " R2=" << (tc.fit.defined ? fmt(tc.fit.r2) : "undefined")
      << (curve_ok ? "" : "  <- fails");
  }
  return {ok, "N=10000 per point, k_c 0..6; plain success counts and tilted rates:" + d.str()};
}

// ---- 5: majority rewrite ----

Verdict majority_rewrite() {
  netsim::ScenarioConfig cfg = netsim::load_scenario(kScenarios / "majority_rewrite.cfg");
  netsim::RewriteStudy s = netsim::majority_rewrite_study(cfg, 0.55, 5, 100, *cfg.seed);
  return {s.successes > 90, std::to_string(s.successes) + "/100 runs replaced a public suffix of depth >= 5"};
}

// ---- 6: conservation ----

Verdict conservation() {
  std::size_t checked = 0;
  std::map<ledger::TxKind, int> kinds;
  int blocked = 0;
  auto check_chain = [&](const ledger::LocalChain& chain) -> bool {
    for (std::size_t n = 0; n <= chain.size(); ++n, ++checked)
      if (!ledger::conserves(chain.state_at(n))) return false;
    for (const auto& b : chain.blocks())
      for (const auto& tx : b.txs) ++kinds[tx.kind];
    blocked += static_cast<int>(chain.state().blocked_addresses().size());
    return true;
  };
  for (std::uint64_t seed = 0; seed < 300; ++seed)
    if (!check_chain(oracle::random_trace(seed).chain)) return {false, "feature trace " + std::to_string(seed)};
  ledger::MoneyProfile femto = extensions::bitguilder_plus();
  femto.scheme = crypto::SignatureScheme::null;
  femto.check_pow = false;
  femto.halving_interval = 10;
  femto.epochs = 6;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    if (!check_chain(oracle::random_trace(5000 + seed, 12, 6, femto).chain))
      return {false, "femto trace " + std::to_string(seed)};

  for (const char* name : {"desk_supply.cfg", "partition.cfg", "double_spend.cfg", "majority_rewrite.cfg"}) {
    netsim::ScenarioConfig cfg = netsim::load_scenario(kScenarios / name);
    if (cfg.attack && cfg.attack->kind == netsim::AttackKind::majority_rewrite) cfg.stop.time = numerics::Rat(60000);
    netsim::RunResult r = netsim::run(cfg, *cfg.seed);
    for (const auto& [id, view] : r.views)
      for (auto n = view.tip(); n; n = n->parent(), ++checked)
        if (!ledger::conserves(n->state())) return {false, std::string(name) + " view of " + id};
  }
  bool all_kinds = true;
  for (auto k : {ledger::TxKind::ordinary, ledger::TxKind::future, ledger::TxKind::conditional_future,
                 ledger::TxKind::restitution, ledger::TxKind::key_destruction})
    all_kinds = all_kinds && kinds[k] > 0;
  std::ostringstream d;
  d << checked << " states exact; tx kinds:";
  for (auto [k, n] : kinds) d << ' ' << ledger::to_string(k) << '=' << n;
  d << "; penalized addresses " << blocked;
  return {all_kinds && blocked > 0, d.str()};
}

// ---- 7: meadow laws ----

Verdict meadow_laws() {
  std::mt19937_64 gen(20240601);
  for (int i = 0; i < 10000; ++i) {
    Rat x = oracle::random_rat(gen), y = oracle::random_rat(gen), z = oracle::random_rat(gen);
    bool ok = x + y == y + x && x * y == y * x && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
              x * (y + z) == x * y + x * z && x + Rat(0) == x && x * Rat(1) == x && x - x == Rat(0) &&
              x.inverse().inverse() == x && x * (x * x.inverse()) == x && (x * y).inverse() == x.inverse() * y.inverse();
    if (!ok) return {false, "law fails at x=" + x.str() + " y=" + y.str() + " z=" + z.str()};
  }
  if (!(Rat(0).inverse() == Rat(0) && numerics::meadow_div(Rat(1), Rat(0)) == Rat(0)))
    return {false, "0^-1 is not 0"};
  for (int i = 0; i < 1000; ++i) {
    numerics::Expr e = oracle::random_expr(gen, 5);
    if (!(numerics::parse_expr(e.str()) == e)) return {false, "round trip fails on " + e.str()};
  }
  return {true, "10000 samples of the field laws with total inverse, 0^-1 = 0, 1000 expression round trips"};
}

// ---- 8: promise scenario ----

Verdict promise_scenario() {
  using promises::ScenarioVariant;
  using promises::Status;
  promises::ScenarioReport base = promises::run_promise_scenario(ScenarioVariant::base);
  promises::AgentSet meet;
  std::set_intersection(base.population.begin(), base.population.end(), base.group.begin(), base.group.end(),
                        std::inserter(meet, meet.end()));
  bool all_satisfied = !base.statuses.empty();
  for (const auto& [label, st] : base.statuses) all_satisfied = all_satisfied && st == Status::satisfied;
  bool served = base.served == std::vector<promises::Agent>{"Q"} && base.condition_verified;
  bool anonymity = base.payer_anonymity.at("R1") == meet && base.payer_anonymity.at("R2") == meet;
  if (!(all_satisfied && served && anonymity))
    return {false, "base variant: satisfied=" + std::to_string(all_satisfied) + " served=" +
                       std::to_string(served) + " anonymity=" + std::to_string(anonymity)};

  std::ostringstream d;
  d << "base: all " << base.statuses.size() << " promises satisfied, service delivered, anonymity set |A ∩ G| = "
    << meet.size() << ";";
  for (auto v : {ScenarioVariant::alt1, ScenarioVariant::alt2, ScenarioVariant::alt3}) {
    promises::ScenarioReport r = promises::run_promise_scenario(v);
    bool same_prefix = std::equal(base.statuses.begin(), base.statuses.end() - 1, r.statuses.begin());
    bool final_ok = r.statuses.back().second == Status::satisfied;
    bool differs = r.payer_anonymity != base.payer_anonymity;
    if (!(same_prefix && final_ok && differs)) return {false, to_string(v) + " does not differ as specified"};
    d << ' ' << to_string(v) << ": R1 sees " << r.payer_anonymity.at("R1").size() << " candidates;";
  }
  return {true, d.str()};
}

// ---- 9: dual-money loan ----

Verdict loan_fixture() {
  using extensions::ExchangeMarket;
  ExchangeMarket flat(std::map<numerics::Rat, Rat>{{Rat(0), Rat(3)}});
  ExchangeMarket adverse(std::map<numerics::Rat, Rat>{{Rat(0), Rat(2)}, {Rat(10), Rat(3)}});
  auto f = extensions::run_loan(flat, Rat(100), Rat(5), Rat(0), Rat(10), Rat(5));
  auto a = extensions::run_loan(adverse, Rat(100), Rat(5), Rat(0), Rat(10), Rat(5));
  bool redemption = f.loan.redemption() == extensions::nmcoin().units(Rat(105)) &&
                    a.loan.redemption() == extensions::nmcoin().units(Rat(105));
  // Hand computation: flat 3 NMC/BGU gives 105/3 - 100/3 = 5/3 BGU;
  // 2 -> 3 NMC/BGU gives 105/3 - 100/2 = -15 BGU.
  bool flat_ok = f.pnl == Rat(5, 3) && f.realized > Rat(0);
  bool adverse_ok = a.pnl == Rat(-15) && a.realized < Rat(0);
  return {redemption && flat_ok && adverse_ok, "redemption 100 + 5 = 105 NMC; lender P&L flat " + f.pnl.str() +
                                                   " BGU, adverse " + a.pnl.str() + " BGU"};
}

// ---- 10: wealth identities ----

Verdict wealth_identities() {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 2000; ++trial) {
    crypto::Rng rng(gen());
    std::size_t n_agents = 1 + gen() % 6, n_accounts = 1 + gen() % 8;
    accounting::Holdings q;
    accounting::AccessRelation access;
    std::vector<std::string> agents;
    for (std::size_t i = 0; i < n_agents; ++i) agents.push_back("A" + std::to_string(i));
    for (std::size_t j = 0; j < n_accounts; ++j) {
      auto addr = crypto::gen_keypair(rng, crypto::SignatureScheme::null).address;
      q[addr] = Rat(static_cast<std::int64_t>(gen() % 1000000), static_cast<std::int64_t>(1 + gen() % 1000));
      for (const auto& a : agents)
        if (gen() % 3 == 0) access.add(a, addr, accounting::Provenance::self_asserted);
    }
    Rat total, accessed;
    for (const auto& a : agents) {
      Quantity w = accounting::wealth1(a, q, access);
      Quantity tax = accounting::taxation(a, q, access);
      if (!(tax.value * Rat(100) == w.value && tax.dim == numerics::Dimension("FBGU")))
        return {false, "taxation differs from wealth/100 in trial " + std::to_string(trial)};
      total += w.value;
    }
    for (const auto& [addr, amount] : q)
      if (access.holders(addr) > 0) accessed += amount;
    if (!(total == accessed)) return {false, "sum of wealth differs from accessed holdings in trial " + std::to_string(trial)};
  }
  return {true, "2000 random fixtures: sum of wealth = accessed holdings, taxation = wealth/100 exactly"};
}

// ---- 11: determinism ----

Verdict determinism() {
  std::ostringstream d;
  for (const char* name : {"desk_supply.cfg", "partition.cfg", "double_spend.cfg", "majority_rewrite.cfg"}) {
    netsim::ScenarioConfig cfg = netsim::load_scenario(kScenarios / name);
    if (cfg.attack && cfg.attack->kind == netsim::AttackKind::majority_rewrite) cfg.stop.time = numerics::Rat(60000);
    netsim::RunResult a = netsim::run(cfg, *cfg.seed), b = netsim::run(cfg, *cfg.seed);
    if (a.trace_digest != b.trace_digest) return {false, std::string(name) + " digests differ"};
    d << ' ' << name << '=' << a.trace_digest.substr(0, 12);
  }
  netsim::ScenarioConfig cfg = netsim::load_scenario(kScenarios / "double_spend.cfg");
  netsim::MonteCarloConfig mc = *cfg.monte_carlo;
  mc.runs = 200;
  auto one = netsim::double_spend_study(cfg, mc, 5, 1).json_lines();
  auto four = netsim::double_spend_study(cfg, mc, 5, 4).json_lines();
  if (one != four) return {false, "study output depends on the worker count"};
  return {true, "identical trace digests on repeat:" + d.str() + "; study identical with 1 and 4 workers"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "supply bound", 5, supply_bound},
      {2, "expected value is 50 EUR", 0, expected_value_fifty},
      {3, "incremental state equals replay", 60, replay_equivalence},
      {4, "double-spend success falls exponentially in confirmations", 300, double_spend_curves},
      {5, "majority attacker rewrites a 5-block suffix", 60, majority_rewrite},
      {6, "conservation at every block", 0, conservation},
      {7, "meadow laws and parser round trip", 0, meadow_laws},
      {8, "promise scenario and its alternatives", 0, promise_scenario},
      {9, "dual-money loan", 0, loan_fixture},
      {10, "wealth identities", 0, wealth_identities},
      {11, "determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.budget_seconds == 0 || seconds < c.budget_seconds;
    bool pass = v.pass && in_time;
    failed += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << fmt(seconds, 3)
              << " s" << (in_time ? "" : ", over the " + fmt(c.budget_seconds, 3) + " s budget") << ") " << v.detail
              << std::endl;
  }
  return failed;
}
