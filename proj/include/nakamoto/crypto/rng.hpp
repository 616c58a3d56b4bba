#pragma once

#include <cstdint>
#include <random>

#include "nakamoto/crypto/bytes.hpp"

namespace nakamoto::crypto {

/// Seeded random source. Draws are built from raw engine output rather than
/// std distributions so that every platform produces identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  /// Uniform integer on [lo, hi], unbiased.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  /// Exponential with the given rate (mean 1/rate).
  double exponential(double rate);
  bool bernoulli(double p) { return uniform01() < p; }
  Bytes bytes(std::size_t n);

  /// Independent child stream, e.g. one per Monte Carlo run.
  static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

}  // namespace nakamoto::crypto
