#pragma once

#include <string>
#include <vector>

#include "nakamoto/extensions/exchange.hpp"

namespace nakamoto::extensions {

enum class LoanStatus { open, redeemed, defaulted };
std::string to_string(LoanStatus s);

/// Near-money loan. The fee is fixed when the loan opens; redemption is
/// principal + fee exactly. There is no money-denominated loan type.
struct Loan {
  std::string lender;
  std::string borrower;
  ledger::Amount principal;  // near-money quanta
  ledger::Amount fee;
  Time start;
  Time term;
  LoanStatus status = LoanStatus::open;

  ledger::Amount redemption() const { return principal + fee; }
  Time due() const { return start + term; }
};

struct LoanEvent {
  std::string kind;  // open | redeem | default
  Time time;
  std::string lender;
  std::string borrower;
  ledger::Amount amount;

  nlohmann::ordered_json json() const;
};

/// Lender result in money units when the principal was bought at
/// `rate_open` and the proceeds sold at `rate_close` (near-money per money
/// unit): (l + f)/rate_close - l/rate_open, or -l/rate_open on default.
Rat lender_pnl(const Rat& principal_units, const Rat& fee_units, const Rat& rate_open, const Rat& rate_close,
               bool redeemed);

/// Transfers the principal from lender to borrower. Throws
/// InsufficientFunds when the lender does not hold it (plus fee).
Loan open_loan(DualSystem& sys, const std::string& lender, const std::string& borrower, const ledger::Amount& principal,
               const ledger::Amount& fee, const Time& start, const Time& term, std::vector<LoanEvent>* log);

/// At the due time the borrower redeems if it can; otherwise the loan
/// defaults. A default is only an event: nothing is taken from anyone.
LoanEvent close_loan(DualSystem& sys, Loan& loan, std::vector<LoanEvent>* log);

/// Full workflow for a lender starting from money: buy the principal at the
/// open rate, lend, collect, sell the proceeds at the close rate.
struct LoanOutcome {
  Loan loan;
  std::vector<LoanEvent> events;
  Rat rate_open;
  Rat rate_close;
  Rat pnl;            // lender_pnl at the two rates
  Rat realized;       // change of the lender's money holding, in units
  Rat fees_paid;      // money-chain fees paid by the lender, in units
  Rat rounding_loss;  // value lost to quantum flooring, in money units
};

/// The borrower starts with `borrower_income` near-money units on top of the
/// principal it receives; both parties get a float covering chain fees.
/// realized == pnl - fees_paid - rounding_loss holds exactly.
LoanOutcome run_loan(const ExchangeMarket& market, const Rat& principal_units, const Rat& fee_units,
                     const Time& start, const Time& term, const Rat& borrower_income_units, std::uint64_t seed = 0);

}  // namespace nakamoto::extensions
