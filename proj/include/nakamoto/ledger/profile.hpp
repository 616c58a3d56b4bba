#pragma once

#include <cstdint>
#include <string>

#include "nakamoto/crypto/digest.hpp"
#include "nakamoto/crypto/signer.hpp"
#include "nakamoto/ledger/amount.hpp"
#include "nakamoto/numerics/rat.hpp"

namespace nakamoto::ledger {

/// exim: balances change only through signed transactions in blocks.
/// tim: a governor may additionally adjust the supply.
enum class Policy : std::uint8_t { exim, tim };
enum class Schedule : std::uint8_t { halving, managed };

struct Features {
  bool future = false;
  bool conditional = false;
  bool destruction = false;
  bool restitution = false;
  bool penalties = false;

  friend bool operator==(const Features&, const Features&) = default;
};

/// Parameters of one money system. Amounts are in quanta.
struct MoneyProfile {
  std::string name;
  std::string unit;
  Policy policy = Policy::exim;
  Schedule schedule = Schedule::halving;
  numerics::Rat quantum{1};

  Amount initial_yield;              // h0
  std::uint64_t halving_interval = 1;  // H blocks per epoch
  std::uint64_t epochs = 1;            // E; yield is 0 from epoch E on

  Amount min_fee{1};
  std::uint64_t min_difficulty = 1;
  unsigned alpha = 0;
  crypto::DigestLength digest_length = crypto::DigestLength::sha256;
  crypto::SignatureScheme scheme = crypto::SignatureScheme::ed25519;
  bool check_pow = true;
  Features features;

  numerics::Rat epsilon{0};        // replacement margin
  std::uint64_t checkpoint = 100;  // frozen depth; 0 disables

  /// Small test money: h0 = 50, H = 10, E = 6, quantum 1e-8.
  static MoneyProfile desk();
  /// h0 = 50, H = 210000, E = 33, quantum 1e-8.
  static MoneyProfile bitcoin();

  Amount units(const numerics::Rat& u) const { return Amount::from_units(u, quantum); }
  numerics::Quantity quantity(const Amount& a) const { return a.to_quantity(quantum, unit); }
};

std::string to_string(Policy p);
std::string to_string(Schedule s);

/// New coin for the block at `height`: h0 * 2^-floor(height/H) rounded down
/// to whole quanta, 0 from epoch E on and always 0 for managed schedules.
Amount yield(const MoneyProfile& p, std::uint64_t height);

/// Exact sum of yield over all heights.
Amount total_supply(const MoneyProfile& p);

/// C_M = 2 * h0 * H, the limit of the halving series.
Amount circulation_bound(const MoneyProfile& p);

}  // namespace nakamoto::ledger
