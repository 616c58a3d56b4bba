#include "nakamoto/crypto/puzzle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace nakamoto::crypto {

using boost::multiprecision::cpp_int;

cpp_int puzzle_target(std::uint64_t difficulty, std::uint64_t covered, unsigned alpha, DigestLength len) {
  if (difficulty == 0) throw std::invalid_argument("difficulty must be positive");
  cpp_int space = cpp_int(1) << (8 * static_cast<unsigned>(len));
  if (alpha != 0 && covered >= 8 * static_cast<std::uint64_t>(len) / alpha + 1) return 1;
  cpp_int divisor = cpp_int(difficulty) << static_cast<unsigned>(alpha * covered);
  cpp_int t = space / divisor;
  return t < 1 ? cpp_int(1) : t;
}

Puzzle make_puzzle(Digest seed, std::uint64_t difficulty, std::uint64_t covered, unsigned alpha) {
  DigestLength len = digest_length_from_bytes(seed.size());
  Puzzle p{std::move(seed), difficulty, puzzle_target(difficulty, covered, alpha, len)};
  return p;
}

namespace {

// Precomputed comparison against the target in fixed-width big-endian form.
class Checker {
 public:
  explicit Checker(const Puzzle& p) : len_(p.length()) {
    std::size_t n = static_cast<std::size_t>(len_);
    cpp_int space = cpp_int(1) << (8 * n);
    always_ = p.target >= space;
    if (!always_) {
      Bytes be = int_to_be(p.target);
      target_.assign(n - be.size(), 0);
      target_.insert(target_.end(), be.begin(), be.end());
    }
    buf_ = p.seed.bytes;
    buf_.resize(buf_.size() + 8);
  }

  bool operator()(std::uint64_t s) {
    std::size_t off = buf_.size() - 8;
    for (int i = 0; i < 8; ++i) buf_[off + i] = static_cast<std::uint8_t>(s >> (8 * (7 - i)));
    if (always_) return true;
    Digest d = digest(buf_, len_);
    return std::lexicographical_compare(d.bytes.begin(), d.bytes.end(), target_.begin(), target_.end());
  }

 private:
  DigestLength len_;
  bool always_ = false;
  Bytes target_;
  Bytes buf_;
};

}  // namespace

bool check(const Puzzle& puzzle, Solution s) { return Checker(puzzle)(s.s); }

SolveResult solve(const Puzzle& puzzle, std::uint64_t budget, std::uint64_t start) {
  if (budget == 0) throw std::invalid_argument("solve: budget must be positive");
  Checker c(puzzle);
  SolveResult r;
  for (std::uint64_t i = 0; i < budget; ++i) {
    ++r.attempts;
    if (c(start + i)) {
      r.solution = Solution{start + i};
      return r;
    }
  }
  return r;
}

SolveResult solve_parallel(const Puzzle& puzzle, std::uint64_t budget, unsigned workers) {
  if (budget == 0) throw std::invalid_argument("solve: budget must be positive");
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::uint64_t>(budget, 64))));
  std::uint64_t chunk = (budget + workers - 1) / workers;
  std::vector<SolveResult> results(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = w * chunk;
    if (begin >= budget) break;
    std::uint64_t n = std::min(chunk, budget - begin);
    threads.emplace_back([&, w, begin, n] { results[w] = solve(puzzle, n, begin); });
  }
  for (auto& t : threads) t.join();
  // Ranges are ordered, so the first worker with a hit holds the smallest s.
  SolveResult merged;
  for (const auto& r : results) {
    if (r.solution) {
      merged.solution = r.solution;
      merged.attempts = r.solution->s + 1;
      return merged;
    }
    merged.attempts += r.attempts;
  }
  return merged;
}

}  // namespace nakamoto::crypto
