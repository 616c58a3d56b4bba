#include "nakamoto/extensions/profiles.hpp"

namespace nakamoto::extensions {

using numerics::Rat;

ledger::MoneyProfile bitguilder() {
  ledger::MoneyProfile p = ledger::MoneyProfile::bitcoin();
  p.name = "bitguilder";
  p.unit = "BGU";
  return p;
}

ledger::MoneyProfile bitguilder_plus(unsigned alpha) {
  ledger::MoneyProfile p = bitguilder();
  p.name = "bitguilder-plus";
  p.quantum = Rat::pow10(-15);
  p.initial_yield = p.units(50);
  p.min_fee = ledger::Amount(1);
  p.alpha = alpha;
  p.features = {true, true, true, true, true};
  return p;
}

ledger::MoneyProfile nmcoin() {
  ledger::MoneyProfile p;
  p.name = "nmcoin";
  p.unit = "NMC";
  p.policy = ledger::Policy::tim;
  p.schedule = ledger::Schedule::managed;
  p.quantum = Rat::pow10(-8);
  p.initial_yield = ledger::Amount();
  p.halving_interval = 1;
  p.epochs = 0;
  return p;
}

}  // namespace nakamoto::extensions
