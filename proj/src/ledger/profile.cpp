#include "nakamoto/ledger/profile.hpp"

namespace nakamoto::ledger {

using numerics::Rat;

MoneyProfile MoneyProfile::desk() {
  MoneyProfile p;
  p.name = "desk";
  p.unit = "U";
  p.quantum = Rat::pow10(-8);
  p.initial_yield = p.units(50);
  p.halving_interval = 10;
  p.epochs = 6;
  p.digest_length = crypto::DigestLength::sha256;
  return p;
}

MoneyProfile MoneyProfile::bitcoin() {
  MoneyProfile p;
  p.name = "bitcoin";
  p.unit = "BTC";
  p.quantum = Rat::pow10(-8);
  p.initial_yield = p.units(50);
  p.halving_interval = 210000;
  p.epochs = 33;
  return p;
}

std::string to_string(Policy p) { return p == Policy::exim ? "exim" : "tim"; }
std::string to_string(Schedule s) { return s == Schedule::halving ? "halving" : "managed"; }

Amount yield(const MoneyProfile& p, std::uint64_t height) {
  if (p.schedule == Schedule::managed || p.halving_interval == 0) return {};
  std::uint64_t epoch = height / p.halving_interval;
  if (epoch >= p.epochs || epoch >= 128) return {};
  return Amount(Quanta(p.initial_yield.quanta() >> static_cast<unsigned>(epoch)));
}

Amount total_supply(const MoneyProfile& p) {
  Amount total;
  if (p.schedule == Schedule::managed) return total;
  for (std::uint64_t e = 0; e < p.epochs && e < 128; ++e)
    total += yield(p, e * p.halving_interval) * p.halving_interval;
  return total;
}

Amount circulation_bound(const MoneyProfile& p) {
  if (p.schedule == Schedule::managed) return {};
  return p.initial_yield * 2 * p.halving_interval;
}

}  // namespace nakamoto::ledger
