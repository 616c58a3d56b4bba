#pragma once

// Shared between the validation and block application translation units.

#include <map>
#include <optional>

#include "nakamoto/ledger/validate.hpp"

namespace nakamoto::ledger::detail {

bool feature_enabled(const Features& f, TxKind k);
bool well_formed(const Transaction& tx);
bool signatures_valid(const Transaction& tx, const MoneyProfile& profile);
/// Amounts taken from each address when the transaction is admitted.
std::map<Address, Amount> admission_debits(const Transaction& tx);
std::optional<TxRejection> check_rules(const LedgerState& state, const Transaction& tx,
                                       const MoneyProfile& profile, bool check_signatures);

}  // namespace nakamoto::ledger::detail
