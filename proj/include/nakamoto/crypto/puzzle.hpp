#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "nakamoto/crypto/digest.hpp"

namespace nakamoto::crypto {

/// Proof-of-work problem: find s such that digest(seed || s) < target, with s
/// encoded as 8 bytes big-endian and the digest read as a big-endian integer.
///
/// target = floor(2^(8L) / (m * 2^(alpha*n))), at least 1, where L is the
/// digest length, m the difficulty and n the number of covered transactions.
/// alpha = 0 gives a Bitcoin-like puzzle; larger alpha slopes difficulty
/// exponentially in n.
struct Puzzle {
  Digest seed;
  std::uint64_t difficulty = 1;
  boost::multiprecision::cpp_int target;

  DigestLength length() const { return digest_length_from_bytes(seed.size()); }
  friend bool operator==(const Puzzle&, const Puzzle&) = default;
};

struct Solution {
  std::uint64_t s = 0;
  friend bool operator==(const Solution&, const Solution&) = default;
};

boost::multiprecision::cpp_int puzzle_target(std::uint64_t difficulty, std::uint64_t covered,
                                             unsigned alpha, DigestLength len);

Puzzle make_puzzle(Digest seed, std::uint64_t difficulty, std::uint64_t covered, unsigned alpha);

/// One digest evaluation.
bool check(const Puzzle& puzzle, Solution s);

struct SolveResult {
  std::optional<Solution> solution;  // empty: budget exhausted
  std::uint64_t attempts = 0;
};

/// Tries s = start, start+1, ... for at most `budget` candidates. Throws
/// std::invalid_argument when budget is 0.
SolveResult solve(const Puzzle& puzzle, std::uint64_t budget, std::uint64_t start = 0);

/// Splits [0, budget) into contiguous ranges over `workers` threads; the
/// smallest solving s wins, so the result equals solve(puzzle, budget).
SolveResult solve_parallel(const Puzzle& puzzle, std::uint64_t budget, unsigned workers);

}  // namespace nakamoto::crypto
