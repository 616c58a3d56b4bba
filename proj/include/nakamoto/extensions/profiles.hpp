#pragma once

#include "nakamoto/ledger/profile.hpp"

namespace nakamoto::extensions {

/// Bitcoin parameters under the BGU unit; exim, no extension features.
ledger::MoneyProfile bitguilder();

/// Bitguilder with femto quanta (1e-15 BGU) and every ledger feature on:
/// future and conditional-future transactions, key destruction,
/// restitution and double-spend penalties. `alpha` slopes puzzle difficulty
/// in the number of covered transactions.
ledger::MoneyProfile bitguilder_plus(unsigned alpha = 0);

/// Managed near-money (NMC): tim policy, supply set by a governor, no
/// mining reward.
ledger::MoneyProfile nmcoin();

}  // namespace nakamoto::extensions
