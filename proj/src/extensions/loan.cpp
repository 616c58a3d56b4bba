#include "nakamoto/extensions/loan.hpp"

#include "nakamoto/extensions/profiles.hpp"

namespace nakamoto::extensions {

using ledger::Amount;

std::string to_string(LoanStatus s) {
  switch (s) {
    case LoanStatus::open: return "open";
    case LoanStatus::redeemed: return "redeemed";
    case LoanStatus::defaulted: return "defaulted";
  }
  return "?";
}

nlohmann::ordered_json LoanEvent::json() const {
  return {{"event", "loan-" + kind}, {"time", time.str()},       {"lender", lender},
          {"borrower", borrower},    {"amount", amount.str()}};
}

Rat lender_pnl(const Rat& principal_units, const Rat& fee_units, const Rat& rate_open, const Rat& rate_close,
               bool redeemed) {
  Rat paid = principal_units / rate_open;
  return redeemed ? (principal_units + fee_units) / rate_close - paid : -paid;
}

Loan open_loan(DualSystem& sys, const std::string& lender, const std::string& borrower, const Amount& principal,
               const Amount& fee, const Time& start, const Time& term, std::vector<LoanEvent>* log) {
  sys.transfer_near(lender, borrower, principal);
  Loan loan{lender, borrower, principal, fee, start, term, LoanStatus::open};
  if (log) log->push_back({"open", start, lender, borrower, principal});
  return loan;
}

LoanEvent close_loan(DualSystem& sys, Loan& loan, std::vector<LoanEvent>* log) {
  if (loan.status != LoanStatus::open) throw std::logic_error("loan already closed");
  const Amount owed = loan.redemption();
  LoanEvent e{"redeem", loan.due(), loan.lender, loan.borrower, owed};
  if (sys.near_balance(loan.borrower) >= owed + sys.near().profile().min_fee) {
    sys.transfer_near(loan.borrower, loan.lender, owed);
    loan.status = LoanStatus::redeemed;
  } else {
    e.kind = "default";
    e.amount = Amount();
    loan.status = LoanStatus::defaulted;
  }
  if (log) log->push_back(e);
  return e;
}

LoanOutcome run_loan(const ExchangeMarket& market, const Rat& principal_units, const Rat& fee_units,
                     const Time& start, const Time& term, const Rat& borrower_income_units, std::uint64_t seed) {
  DualSystem sys(bitguilder(), nmcoin(), market, seed);
  const auto& money = sys.money().profile();
  const auto& near = sys.near().profile();
  const std::string lender = "P", borrower = "Q";
  sys.add_agent(lender);
  sys.add_agent(borrower);

  LoanOutcome out;
  out.rate_open = market.rate_at(start);
  out.rate_close = market.rate_at(start + term);
  const Amount l = near.units(principal_units), f = near.units(fee_units);

  // Reserves: the desk mines money and the governor funds the desk's
  // near-money side; lender gets enough money to buy the principal.
  const Rat buy_units = principal_units / out.rate_open;
  Rat buy_quanta = buy_units / money.quantum;
  Amount buy = Amount::from_units(Rat(-Rat(-buy_quanta).floor()), Rat(1));  // ceiling
  std::size_t lender_blocks = 1;
  while (money.initial_yield * lender_blocks < buy + money.min_fee * 2) ++lender_blocks;
  sys.mine_money_to(lender, lender_blocks);
  sys.mine_money_to(DualSystem::kDesk, lender_blocks + 1);
  sys.issue_near(DualSystem::kDesk, l * 2 + f * 2 + near.units(borrower_income_units) + near.min_fee * 8,
                 "exchange desk reserve");
  if (!borrower_income_units.is_zero()) sys.transfer_near(DualSystem::kDesk, borrower, near.units(borrower_income_units));
  // Small near-money floats pay both parties' chain fees.
  sys.transfer_near(DualSystem::kDesk, lender, near.min_fee * 2);
  sys.transfer_near(DualSystem::kDesk, borrower, near.min_fee * 2);

  const Amount money_before = sys.money_balance(lender);
  sys.exchange(lender, buy, Direction::to_near_money, start);
  // Buying whole quanta overshoots the principal's price by under a quantum.
  Rat rounding = buy.to_rat() * money.quantum - buy_units;
  out.loan = open_loan(sys, lender, borrower, l, f, start, term, &out.events);
  close_loan(sys, out.loan, &out.events);
  bool redeemed = out.loan.status == LoanStatus::redeemed;
  if (redeemed) {
    auto sold = sys.exchange(lender, out.loan.redemption(), Direction::to_money, out.loan.due());
    rounding += sold.dust;
  }
  out.fees_paid = Rat(money.min_fee.to_rat() * money.quantum);
  out.pnl = lender_pnl(principal_units, fee_units, out.rate_open, out.rate_close, redeemed);
  Rat after = sys.money_balance(lender).to_rat() * money.quantum;
  out.realized = after - money_before.to_rat() * money.quantum;
  out.rounding_loss = rounding;
  return out;
}

}  // namespace nakamoto::extensions
