#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "nakamoto/netsim/attacks.hpp"
#include "nakamoto/netsim/participation_service.hpp"
#include "nakamoto/netsim/simulation.hpp"

using namespace nakamoto;
using namespace nakamoto::netsim;

namespace {

std::string scenario_path(const std::string& name) { return std::string(NAKAMOTO_SCENARIO_DIR) + "/" + name; }

ScenarioConfig two_miners(const std::string& mode, std::uint64_t blocks) {
  return parse_scenario(R"(
name: pair
profile: {base: desk, signature: "null"}
mining: {mode: )" + mode + R"(, difficulty: 16, block_interval: 600}
participants:
  - {id: a, role: miner, hash_power: 1}
  - {id: b, role: miner, hash_power: 1}
stop: {blocks: )" + std::to_string(blocks) + R"(, time: 100000000}
)");
}

// Every block of every view keeps coin conserved.
void expect_conserved(const RunResult& r) {
  for (const auto& [id, v] : r.views)
    for (auto n = v.tip(); n; n = n->parent()) ASSERT_TRUE(ledger::conserves(n->state())) << id << " at " << n->height();
}

// Closed-form race probability computed by dynamic programming over block
// sequences instead of the negative-binomial sum: walk the honest/attacker
// race block by block until the honest side has k blocks, then apply the
// gambler's-ruin catch-up probability to the attacker's deficit.
double race_by_dp(double q, std::uint64_t k) {
  double p = 1 - q, r = q / p;
  if (k == 0) return r;
  // dist[h][a]: probability of h honest and a attacker blocks so far.
  std::size_t amax = 400;
  std::vector<std::vector<double>> dist(k + 1, std::vector<double>(amax + 1, 0));
  dist[0][0] = 1;
  for (std::size_t h = 0; h < k; ++h)
    for (std::size_t a = 0; a <= amax; ++a) {
      double m = dist[h][a];
      if (m == 0) continue;
      dist[h + 1][a] += m * p;
      if (a < amax) dist[h][a + 1] += m * q;
    }
  double total = 0;
  for (std::size_t a = 0; a <= amax; ++a) {
    double m = dist[k][a];
    total += m * (a > k ? 1.0 : std::pow(r, static_cast<double>(k - a + 1)));
  }
  return total;
}

}  // namespace

TEST(Scenario, BundledConfigsParse) {
  for (const char* name : {"double_spend.cfg", "majority_rewrite.cfg", "partition.cfg", "desk_supply.cfg"}) {
    ScenarioConfig c = load_scenario(scenario_path(name));
    EXPECT_TRUE(c.seed.has_value()) << name;
    EXPECT_NO_THROW(c.validate(true)) << name;
  }
  ScenarioConfig ds = load_scenario(scenario_path("double_spend.cfg"));
  ASSERT_TRUE(ds.monte_carlo);
  EXPECT_EQ(ds.monte_carlo->runs, 10000u);
  EXPECT_EQ(ds.profile.scheme, crypto::SignatureScheme::null);
}

TEST(Scenario, SyntaxErrorsCarryPosition) {
  try {
    parse_scenario("name: x\nparticipants: [\n  {id: a,\n");
    FAIL();
  } catch (const InvalidConfig& e) {
    ASSERT_TRUE(e.line());
    EXPECT_GE(*e.line(), 3u);
  }
  try {
    parse_scenario("name: x\nmining: {mode: warp}\n");
    FAIL();
  } catch (const InvalidConfig& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(e.reason().find("warp"), std::string::npos);
  }
  try {
    parse_scenario("name: x\nbogus: 1\n");
    FAIL();
  } catch (const InvalidConfig& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(Scenario, SemanticErrorsPointAtTheEntry) {
  const char* text = R"(name: x
participants:
  - {id: a, role: miner, hash_power: 1}
  - {id: b, role: user}
actions:
  - at: 10
    partition: {groups: [[a], [b, a]], heal: 20}
)";
  try {
    parse_scenario(text);
    FAIL();
  } catch (const InvalidConfig& e) {
    EXPECT_EQ(e.path(), "actions[0]");
    EXPECT_EQ(e.line(), 6u);
    EXPECT_NE(e.reason().find("overlapping"), std::string::npos);
  }
  EXPECT_THROW(parse_scenario("participants:\n  - {id: u, role: user, hash_power: 1}\n"), InvalidConfig);
  EXPECT_THROW(parse_scenario("participants:\n  - {id: u, role: user}\n"), InvalidConfig);
  EXPECT_THROW(parse_scenario("participants:\n  - {id: a, role: miner, hash_power: 1}\n"
                              "  - {id: i, role: indirect-user, service: a}\n"),
               InvalidConfig);
  ScenarioConfig no_seed = parse_scenario("participants:\n  - {id: a, role: miner, hash_power: 1}\n");
  EXPECT_NO_THROW(no_seed.validate());
  EXPECT_THROW(no_seed.validate(true), InvalidConfig);
}

TEST(Simulation, SingleMinerSupplyIsTheYieldSum) {
  ScenarioConfig c = parse_scenario(R"(
profile: {base: desk}
mining: {mode: hashcash, difficulty: 8, block_interval: 600}
participants:
  - {id: m, role: miner, hash_power: 1}
stop: {blocks: 10, time: 10000000}
)");
  RunResult r = run(c, 0);
  ASSERT_EQ(r.reference.length(), 10u);
  ledger::Quanta expected = 0;
  for (std::uint64_t k = 0; k < 10; ++k) expected += c.profile.initial_yield.quanta() >> (k / 10);
  EXPECT_EQ(r.reference.state().minted_total(), ledger::Amount(expected));
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.metrics.miners.at("m").blocks, 10u);
  expect_conserved(r);
}

TEST(Simulation, SameSeedSameTrace) {
  for (const char* name : {"partition.cfg", "desk_supply.cfg"}) {
    ScenarioConfig c = load_scenario(scenario_path(name));
    RunOptions o;
    o.keep_trace = true;
    RunResult a = run(c, 5, o), b = run(c, 5, o), d = run(c, 6, o);
    EXPECT_EQ(a.trace_digest, b.trace_digest) << name;
    EXPECT_EQ(a.trace, b.trace) << name;
    EXPECT_EQ(a.json_lines(c), b.json_lines(c)) << name;
    EXPECT_NE(a.trace_digest, d.trace_digest) << name;
  }
}

TEST(Simulation, EqualMinersSplitTheBlocks) {
  for (const char* mode : {"sampled", "hashcash"}) {
    RunResult r = run(two_miners(mode, 1001), 17);
    ASSERT_TRUE(r.converged) << mode;
    double a = static_cast<double>(r.metrics.miners["a"].blocks), b = static_cast<double>(r.metrics.miners["b"].blocks);
    double share = a / (a + b);
    EXPECT_NEAR(share, 0.5, 0.05) << mode;
    EXPECT_GE(a + b, 1000.0) << mode;
    expect_conserved(r);
  }
}

TEST(Simulation, PartitionForksThenHeals) {
  ScenarioConfig c = load_scenario(scenario_path("partition.cfg"));
  RunOptions o;
  o.keep_trace = true;
  RunResult r = run(c, *c.seed, o);
  ASSERT_EQ(r.metrics.fork_reports.size(), 1u);
  auto report = nlohmann::json::parse(r.metrics.fork_reports[0]);
  EXPECT_EQ(report["tips"].size(), 2u);
  EXPECT_FALSE(r.metrics.forks.empty());
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.views.at("west").tip(), r.views.at("east").tip());
  expect_conserved(r);
}

TEST(Simulation, HeavierBranchWinsAfterHeal) {
  // West mines alone during the split; east holds almost no power.
  ScenarioConfig c = parse_scenario(R"(
profile: {base: desk, signature: "null"}
participants:
  - {id: west, role: miner, hash_power: 0.95}
  - {id: east, role: miner, hash_power: 0.05}
actions:
  - at: 1
    partition: {groups: [[west], [east]], heal: 30000}
stop: {time: 30001}
)");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RunResult r = run(c, seed);
    ASSERT_TRUE(r.converged);
    auto report = nlohmann::json::parse(r.metrics.fork_reports.at(0));
    // The heavier tip at heal time is on the final chain.
    std::string heavy;
    long best = -1;
    for (const auto& t : report["tips"]) {
      long d = std::stol(t["total_difficulty"].get<std::string>());
      if (d > best) {
        best = d;
        heavy = t["tip"].get<std::string>();
      }
    }
    bool found = false;
    for (auto n = r.reference.tip(); n; n = n->parent()) found = found || n->digest().hex() == heavy;
    EXPECT_TRUE(found) << seed;
  }
}

TEST(Simulation, EqualBranchesStillConverge) {
  ScenarioConfig c = parse_scenario(R"(
profile: {base: desk, signature: "null"}
participants:
  - {id: west, role: miner, hash_power: 1}
  - {id: east, role: miner, hash_power: 1}
actions:
  - at: 1
    partition: {groups: [[west], [east]], heal: 6000}
stop: {time: 6001}
)");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RunResult r = run(c, seed);
    EXPECT_TRUE(r.converged) << seed;
    EXPECT_EQ(r.views.at("west").tip(), r.views.at("east").tip()) << seed;
  }
}

TEST(ParticipationService, DepositThenWithdraw) {
  ParticipationService s("svc");
  s.add_user("u");
  ledger::Amount onchain(500);
  s.deposit("u", 500, onchain);
  ledger::Address to{};
  ServicePayout p = s.withdraw("u", 500, to, 1, onchain);
  EXPECT_EQ(p.output.amount + p.fee, ledger::Amount(500));
  EXPECT_EQ(s.claim("u"), ledger::Amount());
  EXPECT_TRUE(s.solvent(onchain - ledger::Amount(500)));
  EXPECT_THROW(s.claim("nobody"), UnknownClaimant);
  EXPECT_THROW(s.deposit("nobody", 1, onchain), UnknownClaimant);
  EXPECT_THROW(s.deposit("u", 1, ledger::Amount()), InsolventService);
  EXPECT_NO_THROW(s.check(ledger::Amount()));
  s.deposit("u", 10, 10);
  EXPECT_THROW(s.check(9), InsolventService);
}

TEST(ParticipationService, RandomOperationsKeepSolvency) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    ParticipationService s("svc");
    std::vector<std::string> users{"a", "b", "c"};
    for (const auto& u : users) s.add_user(u);
    std::uint64_t holdings = 0;
    for (int step = 0; step < 50; ++step) {
      std::string u = users[gen() % 3], v = users[gen() % 3];
      std::uint64_t amount = 1 + gen() % 40;
      try {
        switch (gen() % 4) {
          case 0: holdings += amount; break;  // coin arrives on-chain
          case 1: s.deposit(u, amount, holdings); break;
          case 2: s.transfer(u, v, amount, holdings); break;
          case 3: {
            s.withdraw(u, amount, ledger::Address{}, 1, holdings);
            holdings -= amount;
            break;
          }
        }
      } catch (const InsufficientClaim&) {
      } catch (const InsolventService&) {
      }
      ASSERT_TRUE(s.solvent(holdings));
    }
  }
}

TEST(Simulation, ServiceOperationsInAScenario) {
  ScenarioConfig c = load_scenario(scenario_path("desk_supply.cfg"));
  RunResult r = run(c, *c.seed);
  ASSERT_EQ(r.metrics.services.size(), 1u);
  const ServiceSnapshot& s = r.metrics.services[0];
  EXPECT_EQ(s.per_user.at("bob"), c.profile.units(11));
  EXPECT_EQ(s.per_user.at("carol"), ledger::Amount());
  EXPECT_LE(s.claims, s.holdings);
  // 20 in, 4 out; the over-large deposit for carol is refused.
  EXPECT_EQ(s.holdings, c.profile.units(16));
  ASSERT_EQ(r.metrics.rejected.size(), 1u);
  EXPECT_NE(r.metrics.rejected[0].find("not backed"), std::string::npos);
  expect_conserved(r);
  EXPECT_EQ(r.reference.length(), 70u);
  EXPECT_EQ(r.reference.state().minted_total(), c.profile.units(numerics::Rat(7875, 8)));
}

TEST(DoubleSpend, NoPowerNeverSucceeds) {
  ScenarioConfig c = load_scenario(scenario_path("double_spend.cfg"));
  for (std::uint64_t k : {0u, 1u, 3u})
    for (std::uint64_t j = 0; j < 100; ++j) {
      AttackOutcome o = double_spend_attack(c, 0.0, k, j);
      ASSERT_FALSE(o.success);
      EXPECT_EQ(o.attacker_blocks, 0u);
    }
}

TEST(DoubleSpend, RaceFormulaMatchesDynamicProgramming) {
  const double frozen[3][7] = {{.111, .0311, .00951, .00303, .00099, .000329, .00011},
                               {.25, .13, .0724, .0417, .0245, .0146, .00875},
                               {.429, .309, .233, .18, .141, .112, .0891}};
  const double qs[3] = {0.1, 0.2, 0.3};
  for (int i = 0; i < 3; ++i)
    for (std::uint64_t k = 0; k <= 6; ++k) {
      double got = race_success_probability(qs[i], k);
      EXPECT_NEAR(got, race_by_dp(qs[i], k), 1e-12);
      EXPECT_NEAR(got / frozen[i][k], 1.0, 0.01) << qs[i] << " " << k;
    }
  EXPECT_EQ(race_success_probability(0, 3), 0);
  EXPECT_EQ(race_success_probability(0.6, 3), 1);
}

TEST(DoubleSpend, MoreConfirmationsLowerTheRate) {
  ScenarioConfig c = load_scenario(scenario_path("double_spend.cfg"));
  MonteCarloConfig mc;
  mc.runs = 10000;
  mc.powers = {0.3};
  mc.confirmations = {0, 4};
  DoubleSpendStudy s = double_spend_study(c, mc, 1);
  const auto& pts = s.curves[0].points;
  EXPECT_LT(pts[1].rate, pts[0].rate);
  // Disjoint two-sigma intervals.
  EXPECT_LT(pts[1].rate + 2 * pts[1].std_error, pts[0].rate - 2 * pts[0].std_error);
}

TEST(DoubleSpend, TiltedEstimatesTrackTheRace) {
  ScenarioConfig c = load_scenario(scenario_path("double_spend.cfg"));
  MonteCarloConfig mc;
  mc.runs = 2000;
  mc.powers = {0.1, 0.2};
  mc.confirmations = {0, 2, 4, 6};
  mc.estimator = Estimator::tilted;
  DoubleSpendStudy s = double_spend_study(c, mc, 2);
  for (const auto& curve : s.curves) {
    EXPECT_TRUE(curve.monotone) << curve.q;
    ASSERT_TRUE(curve.fit.defined);
    EXPECT_GE(curve.fit.r2, 0.9);
    for (const auto& p : curve.points) {
      double oracle = race_success_probability(p.q, p.confirmations);
      // Latency and the give-up rule only lower the rate a little.
      EXPECT_NEAR(p.rate, oracle, 4 * p.std_error + 0.1 * oracle) << p.q << " " << p.confirmations;
    }
  }
}

TEST(DoubleSpend, ParallelRunsGiveTheSameStudy) {
  ScenarioConfig c = load_scenario(scenario_path("double_spend.cfg"));
  MonteCarloConfig mc;
  mc.runs = 300;
  mc.powers = {0.3};
  mc.confirmations = {1, 2};
  EXPECT_EQ(double_spend_study(c, mc, 9, 1).json_lines(), double_spend_study(c, mc, 9, 4).json_lines());
}

TEST(DoubleSpend, LogFit) {
  LogFit f = log_linear_fit({0, 1, 2, 3}, {1, 0.5, 0.25, 0.125});
  ASSERT_TRUE(f.defined);
  EXPECT_NEAR(f.slope, std::log(0.5), 1e-12);
  EXPECT_NEAR(f.r2, 1.0, 1e-12);
  EXPECT_FALSE(log_linear_fit({0, 1}, {0.5, 0}).defined);
}

TEST(MajorityRewrite, SucceedsMostOfTheTime) {
  ScenarioConfig c = load_scenario(scenario_path("majority_rewrite.cfg"));
  RewriteStudy s = majority_rewrite_study(c, 0.55, 5, 20, 4);
  EXPECT_GE(s.successes, 16u);
  EXPECT_GE(s.shallowest, 5u);
}
