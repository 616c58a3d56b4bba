#include <gtest/gtest.h>

#include <random>

#include "nakamoto/accounting/business_case.hpp"
#include "nakamoto/accounting/expected_value.hpp"
#include "nakamoto/accounting/wealth.hpp"
#include "nakamoto/crypto/rng.hpp"

using namespace nakamoto;
using namespace nakamoto::accounting;
using numerics::DimensionMismatch;

namespace {

const auto kScheme = crypto::SignatureScheme::null;

std::vector<crypto::KeyPair> keys(std::size_t n, std::uint64_t seed) {
  crypto::Rng rng(seed);
  std::vector<crypto::KeyPair> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(crypto::gen_keypair(rng, kScheme));
  return out;
}

struct Fixture {
  std::vector<Agent> agents;
  std::vector<crypto::KeyPair> accounts;
  Holdings q;
  AccessRelation access;
};

Fixture random_fixture(std::mt19937_64& gen) {
  Fixture f;
  std::size_t n_agents = 1 + gen() % 6, n_accounts = 1 + gen() % 8;
  for (std::size_t i = 0; i < n_agents; ++i) f.agents.push_back("A" + std::to_string(i));
  f.accounts = keys(n_accounts, gen());
  for (const auto& k : f.accounts) {
    f.q[k.address] = Rat(static_cast<std::int64_t>(gen() % 100000), static_cast<std::int64_t>(1 + gen() % 1000));
    for (const auto& a : f.agents)
      if (gen() % 3 == 0) f.access.add(a, k.address, Provenance::self_asserted);
  }
  return f;
}

}  // namespace

TEST(Valuation, IdentityIntoUnitOfAccount) {
  EXPECT_EQ(valuation(Rat(0)), Quantity(0, "BGUA"));
  EXPECT_EQ(valuation(Rat::parse("3.4")), Quantity(Rat(17, 5), "BGUA"));
  // Beyond the circulation bound is fine for a valuation.
  EXPECT_EQ(valuation(Quantity(Rat(50000000), "BGU")).value, Rat(50000000));
  EXPECT_THROW(valuation(Quantity(1, "NMC")), DimensionMismatch);
}

TEST(Wealth, ExclusivePlusSharedAccount) {
  auto k = keys(2, 1);
  Holdings q{{k[0].address, Rat(10)}, {k[1].address, Rat(6)}};
  AccessRelation access;
  access.add("P", k[0].address, Provenance::self_asserted);
  access.add("P", k[1].address, Provenance::self_asserted);
  access.add("Q", k[1].address, Provenance::self_asserted);
  EXPECT_EQ(wealth1("P", q, access), Quantity(13, "BGUA"));
  EXPECT_EQ(wealth1("Q", q, access), Quantity(3, "BGUA"));
  EXPECT_EQ(wealth1("R", q, access), Quantity(0, "BGUA"));
}

TEST(Wealth, SymmetricSharingSplitsSupplyEvenly) {
  auto k = keys(4, 2);
  Holdings q;
  Rat supply;
  for (std::size_t i = 0; i < k.size(); ++i) {
    q[k[i].address] = Rat(static_cast<std::int64_t>(7 * i + 3));
    supply += q[k[i].address];
  }
  AccessRelation access;
  std::vector<Agent> agents{"A", "B", "C"};
  for (const auto& a : agents)
    for (const auto& kp : k) access.add(a, kp.address, Provenance::self_asserted);
  for (const auto& a : agents) EXPECT_EQ(wealth1(a, q, access).value, supply / Rat(3));
}

TEST(Wealth, SumOverAgentsEqualsAccessedHoldings) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 2000; ++trial) {
    Fixture f = random_fixture(gen);
    Rat total, accessed;
    for (const auto& a : f.agents) total += wealth1(a, f.q, f.access).value;
    for (const auto& [addr, amount] : f.q)
      if (f.access.holders(addr) > 0) accessed += amount;
    ASSERT_EQ(total, accessed);
  }
}

TEST(Taxation, OneHundredthOfWealth) {
  auto k = keys(1, 3);
  AccessRelation access;
  access.add("P", k[0].address, Provenance::self_asserted);
  Holdings q{{k[0].address, Rat(1000)}};
  EXPECT_EQ(taxation("P", q, access), Quantity(10, "FBGU"));
  EXPECT_EQ(taxation("Q", q, access), Quantity(0, "FBGU"));
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 1000; ++trial) {
    Fixture f = random_fixture(gen);
    for (const auto& a : f.agents) {
      Quantity tax = taxation(a, f.q, f.access);
      ASSERT_EQ(tax.dim, numerics::Dimension("FBGU"));
      ASSERT_EQ(tax.value * Rat(100), wealth1(a, f.q, f.access).value);
    }
  }
}

TEST(ConfirmedAccess, Clauses) {
  auto k = keys(2, 4);
  const Address a = k[0].address;
  Assertions raw;
  raw.confirmations.push_back({"P", a, Time(1)});
  raw.demonstrations.push_back(demonstrate("P", k[0], {1, 2, 3}, Time(2), kScheme));
  AccessRelation rel = c_access_closure(raw, Time(10));
  EXPECT_TRUE(rel.has("P", a));
  EXPECT_EQ(rel.provenance("P", a), Provenance::demonstrated);
  // Not yet before both happened.
  EXPECT_FALSE(c_access_closure(raw, Time(2)).has("P", a));

  raw.sharing.push_back({"P", "Q", a, Time(3)});
  raw.sharing.push_back({"Q", "R", a, Time(4)});
  raw.sharing.push_back({"S", "T", a, Time(4)});  // S is not confirmed
  rel = c_access_closure(raw, Time(10));
  EXPECT_TRUE(rel.has("Q", a));
  EXPECT_TRUE(rel.has("R", a));
  EXPECT_EQ(rel.provenance("R", a), Provenance::shared_assertion);
  EXPECT_FALSE(rel.has("T", a));
  EXPECT_FALSE(rel.has("S", a));
}

TEST(ConfirmedAccess, DemonstrationMustVerify) {
  auto k = keys(2, 5);
  Assertions raw;
  raw.confirmations.push_back({"P", k[0].address, Time(0)});
  Demonstration forged = demonstrate("P", k[1], {9}, Time(0), kScheme);
  forged.address = k[0].address;
  raw.demonstrations.push_back(forged);
  EXPECT_FALSE(c_access_closure(raw, Time(1)).has("P", k[0].address));
  raw.demonstrations.push_back(demonstrate("P", k[0], {9}, Time(0), crypto::SignatureScheme::ed25519));
  EXPECT_FALSE(raw.demonstrations.back().valid());  // key pair was made for the other scheme
}

TEST(ConfirmedAccess, MonotoneAndIdempotent) {
  std::mt19937_64 gen(77);
  auto k = keys(4, 6);
  std::vector<Agent> agents{"A", "B", "C", "D", "E"};
  auto pick = [&](const auto& v) { return v[gen() % v.size()]; };
  for (int trial = 0; trial < 300; ++trial) {
    Assertions raw;
    for (int i = 0; i < 12; ++i) {
      const auto& key = pick(k);
      Agent who = pick(agents);
      Time t(static_cast<std::int64_t>(gen() % 10));
      switch (gen() % 3) {
        case 0: raw.confirmations.push_back({who, key.address, t}); break;
        case 1: raw.demonstrations.push_back(demonstrate(who, key, {static_cast<std::uint8_t>(i)}, t, kScheme)); break;
        default: raw.sharing.push_back({who, pick(agents), key.address, t}); break;
      }
    }
    AccessRelation base = c_access_closure(raw, Time(8));
    // Re-asserting the closure as confirmed facts adds nothing.
    Assertions again = raw;
    for (const auto& addr : base.addresses())
      for (const auto& a : agents)
        if (base.has(a, addr)) again.sharing.push_back({a, a, addr, Time(0)});
    ASSERT_EQ(c_access_closure(again, Time(8)), base);
    // More assertions never remove access.
    Assertions more = raw;
    more.sharing.push_back({pick(agents), pick(agents), pick(k).address, Time(1)});
    more.confirmations.push_back({pick(agents), pick(k).address, Time(1)});
    ASSERT_TRUE(base.subset_of(c_access_closure(more, Time(8))));
  }
}

TEST(Wealth2, ConfirmedAccessOnly) {
  auto k = keys(2, 8);
  Holdings q{{k[0].address, Rat(10)}, {k[1].address, Rat(6)}};
  Assertions raw;
  for (const auto& kp : k) {
    raw.confirmations.push_back({"P", kp.address, Time(0)});
    raw.demonstrations.push_back(demonstrate("P", kp, {7}, Time(0), kScheme));
  }
  raw.sharing.push_back({"P", "Q", k[1].address, Time(0)});
  AccessRelation all = c_access_closure(raw, Time(1));
  Quantity w2 = wealth2("P", q, raw, Time(1));
  EXPECT_EQ(w2, Quantity(13, "FBGUA"));
  EXPECT_EQ(w2.value, wealth1("P", q, all).value);
  // An unconfirmed sharing claim does not dilute P's share.
  raw.sharing.push_back({"X", "Y", k[1].address, Time(0)});
  EXPECT_EQ(wealth2("P", q, raw, Time(1)), Quantity(13, "FBGUA"));
  // Without P's sharing claim, Q is unconfirmed and P's share of the second account is whole.
  raw.sharing.erase(raw.sharing.begin());
  EXPECT_EQ(wealth2("P", q, raw, Time(1)), Quantity(16, "FBGUA"));
  EXPECT_EQ(wealth2("P", q, {}, Time(1)), Quantity(0, "FBGUA"));
}

TEST(WealthCsv, Rows) {
  std::string csv = wealth_csv({{"P", Time(3), Quantity(13, "BGUA")}, {"Q", Time(3), Quantity(Rat(1, 2), "FBGU")}});
  EXPECT_EQ(csv, "agent,t,value,unit\nP,3,13,BGUA\nQ,3,1/2,FBGU\n");
}

TEST(BusinessCase, Inequalities) {
  Quantity rate(5, "BGU/U");
  auto op = operating_case(rate, rate);
  EXPECT_TRUE(op.pass);
  EXPECT_EQ(op.productivity, Quantity(1));
  EXPECT_TRUE(op.productivity.dim.dimensionless());
  EXPECT_FALSE(operating_case(Quantity(4, "BGU/U"), Quantity(5, "BGU/U")).pass);
  EXPECT_EQ(operating_case(Quantity(6, "BGU/U"), Quantity(2, "BGU/U")).productivity, Quantity(3));

  EXPECT_TRUE(replacement_case(Quantity(10, "U"), Quantity(3, "BGU/U"), Quantity(30, "BGU")));
  EXPECT_FALSE(replacement_case(Quantity(10, "U"), Quantity(3, "BGU/U"), Quantity(31, "BGU")));
  // t = 10, e' - e = 2, C_E' - C_E = 20: boundary.
  EXPECT_TRUE(improvement_case(Quantity(10, "U"), Quantity(3, "BGU/U"), Quantity(5, "BGU/U"), Quantity(40, "BGU"),
                               Quantity(60, "BGU")));
  EXPECT_FALSE(improvement_case(Quantity(10, "U"), Quantity(3, "BGU/U"), Quantity(5, "BGU/U"), Quantity(40, "BGU"),
                                Quantity(61, "BGU")));
  EXPECT_THROW(operating_case(Quantity(5, "BGU/U"), Quantity(5, "BGU")), DimensionMismatch);
  EXPECT_THROW(replacement_case(Quantity(10, "U"), Quantity(3, "BGU/U"), Quantity(30, "NMC")), DimensionMismatch);
}

TEST(ExpectedValue, FiftyEuro) {
  auto ev = expected_value(Rat::pow10(-5), Quantity(Rat::pow10(14), "EUR"), Rat(2) * Rat::pow10(7));
  EXPECT_EQ(ev.value, Quantity(50, "EUR"));
  EXPECT_FALSE(ev.zero_supply);
  EXPECT_EQ(expected_value(Rat(0), Quantity(Rat::pow10(14), "EUR"), Rat(7)).value, Quantity(0, "EUR"));
  EXPECT_EQ(expected_value(Rat(1), Quantity(Rat(100), "EUR"), Rat(8)).value, Quantity(Rat(25, 2), "EUR"));
  auto none = expected_value(Rat(1, 2), Quantity(Rat(100), "EUR"), Rat(0));
  EXPECT_TRUE(none.zero_supply);
  EXPECT_EQ(none.value, Quantity(0, "EUR"));
  EXPECT_THROW(expected_value(Rat(2), Quantity(1, "EUR"), Rat(1)), std::invalid_argument);
}
